use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_DISCREPANCY_CAP: usize = 256;

/// A bijection on `n` points. `image[i]` is the 0-indexed value of the
/// 0-indexed argument `i`; [`Permutation::apply`] gives the 1-indexed view.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PermutationFile", into = "PermutationFile")]
pub struct Permutation {
    image: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PermutationFile {
    n: usize,
    image: Vec<usize>,
}

impl TryFrom<PermutationFile> for Permutation {
    type Error = Error;
    fn try_from(f: PermutationFile) -> Result<Self> {
        if f.image.len() != f.n {
            return Err(Error::Invalid(format!("{} values for n = {}", f.image.len(), f.n)));
        }
        Permutation::new(f.image)
    }
}

impl From<Permutation> for PermutationFile {
    fn from(p: Permutation) -> Self {
        PermutationFile {
            n: p.image.len(),
            image: p.image,
        }
    }
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!("{image:?} is not a permutation of 0..{}", image.len())));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `π(i)` for `i` in `1..=n`, valued in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }
}

/// Bit-reversal permutation of `{0, ..., 2^h - 1}`.
pub fn vdc_permutation(h: u32) -> Result<Permutation> {
    if h == 0 || h >= usize::BITS {
        return Err(Error::Invalid(format!("bit-reversal needs 1 <= h < {}, got {h}", usize::BITS)));
    }
    if h > 28 {
        return Err(Error::LimitExceeded {
            what: "bit-reversal exponent",
            value: h as usize,
            limit: 28,
        });
    }
    let n = 1usize << h;
    let image = (0..n)
        .map(|i| i.reverse_bits() >> (usize::BITS - h))
        .collect();
    Ok(Permutation { image })
}

pub fn interval_discrepancy(p: &Permutation) -> Result<BigRational> {
    interval_discrepancy_capped(p, DEFAULT_DISCREPANCY_CAP)
}

/// `max over intervals I, J of | |π(I) ∩ J| - |I||J|/n |`.
///
/// For fixed `I` the quantity for `J = [c, d)` is `|g(d) - g(c)| / n` with
/// `g(y) = n·|π(I) ∩ [0, y)| - |I|·y`, so the inner maximum is
/// `max g - min g`; total cost is `O(n^3)`.
pub fn interval_discrepancy_capped(p: &Permutation, cap: usize) -> Result<BigRational> {
    let n = p.n();
    if n > cap {
        return Err(Error::LimitExceeded {
            what: "permutation size for discrepancy",
            value: n,
            limit: cap,
        });
    }
    if n == 0 {
        return Ok(BigRational::from_integer(BigInt::from(0)));
    }
    let mut best: i64 = 0;
    let mut hits = vec![0i64; n];
    for a in 0..n {
        hits.iter_mut().for_each(|h| *h = 0);
        for b in a..n {
            // I = [a, b]
            hits[p.image[b]] += 1;
            let len = (b - a + 1) as i64;
            let (mut g, mut lo, mut hi) = (0i64, 0i64, 0i64);
            for &hy in &hits {
                g += n as i64 * hy - len;
                lo = lo.min(g);
                hi = hi.max(g);
            }
            best = best.max(hi - lo);
        }
    }
    Ok(BigRational::new(BigInt::from(best), BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn bit_reversal_examples() {
        assert_eq!(vdc_permutation(1).unwrap().image(), &[0, 1]);
        assert_eq!(vdc_permutation(2).unwrap().image(), &[0, 2, 1, 3]);
        assert_eq!(vdc_permutation(3).unwrap().image(), &[0, 4, 2, 6, 1, 5, 3, 7]);
        assert!(vdc_permutation(0).is_err());
        assert!(vdc_permutation(64).is_err());
    }

    #[test]
    fn discrepancy_small_cases() {
        assert_eq!(interval_discrepancy(&Permutation::identity(4)).unwrap(), ratio(1, 1));
        assert_eq!(interval_discrepancy(&Permutation::identity(1)).unwrap(), ratio(0, 1));
        assert!(interval_discrepancy_capped(&Permutation::identity(8), 4).is_err());
    }

    #[test]
    fn permutation_file_rejects_non_bijection() {
        assert!(serde_json::from_str::<Permutation>(r#"{"n":3,"image":[0,0,2]}"#).is_err());
        let p: Permutation = serde_json::from_str(r#"{"n":2,"image":[1,0]}"#).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"n":2,"image":[1,0]}"#);
    }
}
