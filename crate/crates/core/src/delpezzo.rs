//! Numerical model on the degree-6 del Pezzo surface `Bl_3 P^2`.
//!
//! The generators lie over the hexagon of lines and the three conic pencils,
//! and intersection numbers on X agree with those of the curves below. This
//! gives an oracle for the pairing that never touches symmetric coordinates.

use crate::picard::{CurveLabel, Letter};

/// Coordinates in the basis `H, E1, E2, E3` with form `diag(1, -1, -1, -1)`.
pub type Vector = [i64; 4];

pub fn pairing(u: &Vector, v: &Vector) -> i64 {
    u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]
}

/// Class of the curve below `label`.
pub fn vector(label: CurveLabel) -> Vector {
    const H: Vector = [1, 0, 0, 0];
    let e = |i: usize| {
        let mut v = [0; 4];
        v[i] = 1;
        v
    };
    let sub = |a: Vector, b: Vector| [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]];
    match (label.letter(), label.index()) {
        (Letter::A, 0) => e(1),
        (Letter::B, 0) => e(2),
        (Letter::C, 0) => e(3),
        (Letter::A, 3) => sub(sub(H, e(2)), e(3)),
        (Letter::B, 3) => sub(sub(H, e(1)), e(3)),
        (Letter::C, 3) => sub(sub(H, e(1)), e(2)),
        // conic pencils through two of the blown-up points
        (Letter::A, _) => sub(H, e(2)),
        (Letter::B, _) => sub(H, e(3)),
        (Letter::C, _) => sub(H, e(1)),
    }
}

/// Numerical class of `K_X`: the sum of the hexagon, `3H - E1 - E2 - E3`.
pub fn canonical() -> Vector {
    [3, -1, -1, -1]
}

/// `Z_i . Z_j` for the twelve generators in [`CurveLabel::ALL`] order.
pub fn gram_matrix() -> [[i64; 12]; 12] {
    let mut g = [[0; 12]; 12];
    for (i, a) in CurveLabel::ALL.iter().enumerate() {
        for (j, b) in CurveLabel::ALL.iter().enumerate() {
            g[i][j] = pairing(&vector(*a), &vector(*b));
        }
    }
    g
}

/// Arithmetic genus from adjunction, `(Z^2 + Z.K)/2 + 1`.
pub fn genus(label: CurveLabel) -> i64 {
    let v = vector(label);
    (pairing(&v, &v) + pairing(&v, &canonical())) / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_and_pencils() {
        for l in CurveLabel::ALL {
            let expected_genus = if l.index() == 0 || l.index() == 3 { 1 } else { 2 };
            assert_eq!(genus(l), expected_genus, "{l}");
        }
        assert_eq!(pairing(&canonical(), &canonical()), 6);
    }
}
