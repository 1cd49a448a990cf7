use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::SpectralInt;
use crate::spectrum::Spectrum;

/// Spectrum of `x_1^d + … + x_n^d`.
///
/// The multiplicity of `k/d` is the number of tuples `1 ≤ a_j ≤ d-1` with
/// `Σ a_j = k + d`. Those counts are the coefficients of
/// `(s + s^2 + … + s^{d-1})^n`, built up one factor at a time.
pub fn fermat_spectrum<T: SpectralInt>(n: u32, d: u32) -> Result<Spectrum<T>> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!("Fermat germ needs n ≥ 1 and d ≥ 2, got n={n}, d={d}")));
    }
    let overflow = || Error::Overflow(format!("multiplicities of the Fermat spectrum ({n}, {d})"));
    let (n, d) = (n as usize, d as usize);

    // counts[s] = number of compositions of s into the parts placed so far
    let mut counts = vec![1u64];
    for _ in 0..n {
        let mut next = vec![0u64; counts.len() + d - 1];
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for a in 1..d {
                next[s + a] = next[s + a].checked_add(c).ok_or_else(overflow)?;
            }
        }
        counts = next;
    }

    let den = T::from_usize(d).ok_or_else(overflow)?;
    let mut s = Spectrum::empty();
    for (sum, &c) in counts.iter().enumerate() {
        if c > 0 {
            let num = T::from_usize(sum).ok_or_else(overflow)? - den.clone();
            s.add(Ratio::new(num, den.clone()), c);
        }
    }
    Ok(s)
}
