//! Hom and Ext¹ dimensions between interval modules, and the Euler form.

use super::interval::Interval;
use super::representation::Representation;

/// `dim Hom(M[a,b], M[c,d])`: 1 iff `c <= a <= d <= b`.
pub fn hom_dim(x: &Interval, y: &Interval) -> usize {
    let (a, b) = (x.start(), x.end());
    let (c, d) = (y.start(), y.end());
    usize::from(c <= a && a <= d && d <= b)
}

/// `dim Ext¹(M[a,b], M[c,d])`, read off the projective resolution
/// `0 → P_{b+1} → P_a → M[a,b] → 0`.
pub fn ext_dim(x: &Interval, y: &Interval) -> usize {
    let (a, b) = (x.start(), x.end());
    let from_syzygy = usize::from(y.contains(b + 1));
    let from_cover = usize::from(y.contains(a));
    // exact: Hom(P_a, Y) → Hom(P_{b+1}, Y) → Ext¹ → 0 with kernel Hom(X, Y)
    from_syzygy + hom_dim(x, y) - from_cover
}

/// Biadditive extension of [`hom_dim`].
pub fn hom_dim_rep(m: &Representation, n: &Representation) -> usize {
    m.summands()
        .flat_map(|(x, mx)| n.summands().map(move |(y, my)| mx * my * hom_dim(&x, &y)))
        .sum()
}

/// Biadditive extension of [`ext_dim`].
pub fn ext_dim_rep(m: &Representation, n: &Representation) -> usize {
    m.summands()
        .flat_map(|(x, mx)| n.summands().map(move |(y, my)| mx * my * ext_dim(&x, &y)))
        .sum()
}

/// `dim Hom(M, U)` for an indecomposable `U`.
pub fn hom_into(m: &Representation, u: &Interval) -> usize {
    m.summands().map(|(x, mult)| mult * hom_dim(&x, u)).sum()
}

/// `⟨x, y⟩ = Σ x_a y_a − Σ x_a y_{a+1}`.
///
/// # Panics
/// If the vectors differ in length.
pub fn euler_form(x: &[usize], y: &[usize]) -> i64 {
    assert_eq!(x.len(), y.len(), "euler_form: length mismatch");
    let diag: i64 = x.iter().zip(y).map(|(&p, &q)| (p * q) as i64).sum();
    let off: i64 = x.iter().zip(y.iter().skip(1)).map(|(&p, &q)| (p * q) as i64).sum();
    diag - off
}
