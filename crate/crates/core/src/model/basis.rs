//! Operator conventions.
//!
//! Single-qubit ordering is `(|1⟩, |0⟩)`, so the two-atom basis (atom 1 the
//! left Kronecker factor) is indexed `0 → |11⟩, 1 → |10⟩, 2 → |01⟩, 3 → |00⟩`.

use num_complex::Complex64;

use crate::numkit::CMatrix;

pub const DIM_ATOMS: usize = 4;
pub const IDX_11: usize = 0;
pub const IDX_10: usize = 1;
pub const IDX_01: usize = 2;
pub const IDX_00: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    One,
    Two,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `|1⟩⟨1|`
pub fn excited_projector() -> CMatrix {
    CMatrix::real_diag(&[1.0, 0.0])
}

/// `|0⟩⟨0|`
pub fn ground_projector() -> CMatrix {
    CMatrix::real_diag(&[0.0, 1.0])
}

/// `|0⟩⟨1|`
pub fn lowering() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]])
}

/// `|1⟩⟨0|`
pub fn raising() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])
}

pub fn sigma_x() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

/// Entries `(1,2) = -i`, `(2,1) = +i` in the `(|1⟩, |0⟩)` ordering.
pub fn sigma_y() -> CMatrix {
    CMatrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => c(0.0, -1.0),
        (1, 0) => c(0.0, 1.0),
        _ => c(0.0, 0.0),
    })
}

/// `|1⟩⟨1| − |0⟩⟨0|`
pub fn sigma_z() -> CMatrix {
    CMatrix::real_diag(&[1.0, -1.0])
}

pub fn paulis() -> [CMatrix; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Lifts a single-qubit operator onto one atom of the pair.
pub fn on_atom(op: &CMatrix, atom: Atom) -> CMatrix {
    let id = CMatrix::identity(2);
    match atom {
        Atom::One => op.kron(&id),
        Atom::Two => id.kron(op),
    }
}

/// `|i⟩⟨j|` in the two-atom basis.
pub fn ket_bra(i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(DIM_ATOMS, DIM_ATOMS);
    m[(i, j)] = c(1.0, 0.0);
    m
}
