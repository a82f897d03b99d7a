use super::coeff::Coeff;
use super::polynomial::QPolynomial;
use crate::error::{Error, Result};

/// Poincaré polynomial of the partial flag variety of type `dims` in an
/// `m`-dimensional space, `[m]! / ([e_a]! [e_{a+1} − e_a]! ⋯ [m − e_b]!)`.
pub fn q_multinomial<C: Coeff>(m: usize, dims: &[usize]) -> Result<QPolynomial<C>> {
    let parts = flag_parts(m, dims)?;
    let mut denominator = QPolynomial::one();
    for p in parts {
        denominator = denominator.checked_mul(&QPolynomial::q_factorial(p)?)?;
    }
    QPolynomial::q_factorial(m)?.div_exact(&denominator)
}

/// The ordinary multinomial `m! / Π parts!`, i.e. [`q_multinomial`] at `q = 1`.
pub fn multinomial<C: Coeff>(m: usize, dims: &[usize]) -> Result<C> {
    let parts = flag_parts(m, dims)?;
    // build it as a product of binomials so every intermediate stays exact
    let mut acc = C::one();
    let mut filled = 0;
    for p in parts {
        for t in 1..=p {
            let num = C::from_usize(filled + t).ok_or(Error::Overflow)?;
            let den = C::from_usize(t).ok_or(Error::Overflow)?;
            acc = acc.checked_mul(&num).ok_or(Error::Overflow)? / den;
        }
        filled += p;
    }
    Ok(acc)
}

fn flag_parts(m: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let mut parts = Vec::with_capacity(dims.len() + 1);
    let mut prev = 0;
    for &d in dims.iter().chain(std::iter::once(&m)) {
        if d < prev {
            return Err(Error::Domain(format!(
                "flag type {dims:?} is not weakly increasing and bounded by {m}"
            )));
        }
        parts.push(d - prev);
        prev = d;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = QPolynomial<u64>;

    #[test]
    fn examples() {
        assert_eq!(q_multinomial::<u64>(2, &[1]).unwrap(), P::from_coeffs(vec![1, 1]));
        assert_eq!(q_multinomial::<u64>(5, &[]).unwrap(), P::one());
        assert_eq!(q_multinomial::<u64>(3, &[1, 2]).unwrap(), P::from_coeffs(vec![1, 2, 2, 1]));
        assert_eq!(q_multinomial::<u64>(0, &[0, 0]).unwrap(), P::one());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(q_multinomial::<u64>(2, &[2, 1]), Err(Error::Domain(_))));
        assert!(matches!(q_multinomial::<u64>(2, &[3]), Err(Error::Domain(_))));
        assert!(matches!(multinomial::<u64>(1, &[2]), Err(Error::Domain(_))));
    }

    /// Gaussian binomials from the recurrence
    /// `[m, k] = [m−1, k−1] + q^k [m−1, k]`, independent of the division.
    fn gaussian(m: usize, k: usize) -> P {
        if k > m {
            return P::zero();
        }
        if k == 0 || k == m {
            return P::one();
        }
        gaussian(m - 1, k - 1).checked_add(&gaussian(m - 1, k).shift(k)).unwrap()
    }

    #[test]
    fn matches_product_of_gaussian_binomials() {
        for m in 0..=7 {
            for a in 0..=m {
                for b in a..=m {
                    // [m; a, b−a, m−b] = [m, b] · [b, a]
                    let expected = gaussian(m, b).checked_mul(&gaussian(b, a)).unwrap();
                    assert_eq!(q_multinomial::<u64>(m, &[a, b]).unwrap(), expected, "m={m} a={a} b={b}");
                    assert_eq!(multinomial::<u64>(m, &[a, b]).unwrap(), expected.eval_one().unwrap());
                }
            }
        }
    }
}
