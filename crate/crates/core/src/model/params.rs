use crate::error::{Error, Result};

/// Parameters of the dispersive two-atom model with the cavity eliminated.
///
/// Atom `j` decays at `(n_t[j] + 1) γ[j]` and is pumped at `n_t[j] γ[j]`;
/// atom 2 additionally decays at `eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveParams {
    /// Cavity-mediated exchange rate `g²/Δ`.
    pub omega_eff: f64,
    pub gamma: [f64; 2],
    pub n_t: [f64; 2],
    pub eta: f64,
}

impl EffectiveParams {
    pub fn new(omega_eff: f64, gamma: [f64; 2], n_t: [f64; 2], eta: f64) -> Result<Self> {
        let p = Self {
            omega_eff,
            gamma,
            n_t,
            eta,
        };
        p.validate()?;
        Ok(p)
    }

    /// Both atoms under identical thermal driving, no extra decay.
    pub fn symmetric(omega_eff: f64, gamma: f64, n_t: f64) -> Result<Self> {
        Self::new(omega_eff, [gamma, gamma], [n_t, n_t], 0.0)
    }

    /// Only atom 1 sees the thermal field; atom 2 decays spontaneously at `eta`.
    pub fn asymmetric(omega_eff: f64, gamma: f64, n_t: f64, eta: f64) -> Result<Self> {
        Self::new(omega_eff, [gamma, 0.0], [n_t, 0.0], eta)
    }

    pub fn validate(&self) -> Result<()> {
        let named = [
            ("omega_eff", self.omega_eff),
            ("gamma1", self.gamma[0]),
            ("gamma2", self.gamma[1]),
            ("n_t1", self.n_t[0]),
            ("n_t2", self.n_t[1]),
            ("eta", self.eta),
        ];
        for (name, v) in named {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parameter(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.gamma[0] == self.gamma[1] && self.n_t[0] == self.n_t[1] && self.eta == 0.0
    }

    /// Atom 2 carries no thermal coupling, only `eta`.
    pub fn is_asymmetric(&self) -> bool {
        self.gamma[1] == 0.0
    }

    pub fn down_rate(&self, atom: usize) -> f64 {
        let thermal = (self.n_t[atom] + 1.0) * self.gamma[atom];
        if atom == 1 {
            thermal + self.eta
        } else {
            thermal
        }
    }

    pub fn up_rate(&self, atom: usize) -> f64 {
        self.n_t[atom] * self.gamma[atom]
    }
}

/// Recommended minimum of `Δ / (g √(n_max + 1))` for the dispersive reduction.
pub const LARGE_DETUNING_RATIO: f64 = 10.0;

/// Atoms + single cavity mode truncated at `n_max` photons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullModelParams {
    pub omega_cavity: f64,
    pub omega_atom: f64,
    pub g: f64,
    /// Cavity field decay rate.
    pub kappa: f64,
    pub n_max: usize,
    pub gamma: [f64; 2],
    pub n_t: [f64; 2],
}

impl FullModelParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(Error::Parameter(format!("n_max must be >= 1, got {}", self.n_max)));
        }
        for (name, v) in [("omega_cavity", self.omega_cavity), ("omega_atom", self.omega_atom), ("g", self.g)] {
            if !v.is_finite() {
                return Err(Error::Parameter(format!("{name} must be finite, got {v}")));
            }
        }
        let rates = [
            ("kappa", self.kappa),
            ("gamma1", self.gamma[0]),
            ("gamma2", self.gamma[1]),
            ("n_t1", self.n_t[0]),
            ("n_t2", self.n_t[1]),
        ];
        for (name, v) in rates {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parameter(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        4 * (self.n_max + 1)
    }

    /// `Δ = ω₀ − ω`.
    pub fn detuning(&self) -> f64 {
        self.omega_atom - self.omega_cavity
    }

    /// `|Δ| / (g √(n_max + 1))`; infinite when `g = 0`.
    pub fn detuning_ratio(&self) -> f64 {
        let denom = self.g.abs() * ((self.n_max + 1) as f64).sqrt();
        if denom == 0.0 {
            f64::INFINITY
        } else {
            self.detuning().abs() / denom
        }
    }

    pub fn is_large_detuning(&self) -> bool {
        self.detuning_ratio() >= LARGE_DETUNING_RATIO
    }

    /// Dispersive counterpart with `Ω = g²/Δ`.
    pub fn effective(&self) -> Result<EffectiveParams> {
        let delta = self.detuning();
        let omega_eff = if self.g == 0.0 {
            0.0
        } else if delta == 0.0 {
            return Err(Error::Parameter("resonant cavity has no dispersive limit".into()));
        } else {
            self.g * self.g / delta
        };
        EffectiveParams::new(omega_eff, self.gamma, self.n_t, 0.0)
    }
}
