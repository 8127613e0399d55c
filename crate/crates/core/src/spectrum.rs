//! Span spectra of vertex subsets of the cycle `C_n` and maximal evenness.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Clockwise,
    Geodesic,
}

/// Sorted multiset of distances between members `span` positions apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumMultiset {
    pub span: usize,
    pub values: Vec<usize>,
    pub kind: SpectrumKind,
}

impl SpectrumMultiset {
    /// Distinct values, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.values.clone();
        s.dedup();
        s
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// The geodesic counterpart: each clockwise value `c` becomes
    /// `min(c, n - c)`.
    pub fn to_geodesic(&self, n: usize) -> SpectrumMultiset {
        let mut values: Vec<usize> = self.values.iter().map(|&c| c.min(n - c)).collect();
        values.sort_unstable();
        SpectrumMultiset { span: self.span, values, kind: SpectrumKind::Geodesic }
    }
}

fn validate(n: usize, a: &[usize]) -> Result<()> {
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParams("cycle subset must be strictly ascending".into()));
    }
    if let Some(&last) = a.last() {
        if last >= n {
            return Err(Error::VertexOutOfRange { vertex: last, n });
        }
    }
    Ok(())
}

/// Clockwise distances `(a[(i + span) mod m] - a[i]) mod n` over all `i`.
pub fn clockwise_spectrum(n: usize, a: &[usize], span: usize) -> Result<SpectrumMultiset> {
    validate(n, a)?;
    let m = a.len();
    if m < 2 || span == 0 || span >= m {
        return Err(Error::InvalidParams(format!(
            "span must lie in [1, {}] for a set of size {m}",
            m.saturating_sub(1)
        )));
    }
    let mut values: Vec<usize> = (0..m).map(|i| (a[(i + span) % m] + n - a[i]) % n).collect();
    values.sort_unstable();
    Ok(SpectrumMultiset { span, values, kind: SpectrumKind::Clockwise })
}

pub fn geodesic_spectrum(n: usize, a: &[usize], span: usize) -> Result<SpectrumMultiset> {
    Ok(clockwise_spectrum(n, a, span)?.to_geodesic(n))
}

/// True when every span spectrum is supported on one integer or on two
/// consecutive integers.
pub fn is_maximally_even(n: usize, a: &[usize]) -> Result<bool> {
    validate(n, a)?;
    for span in 1..a.len() {
        let support = clockwise_spectrum(n, a, span)?.support();
        if support.len() > 2 || support.len() == 2 && support[1] != support[0] + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectra() {
        let s = clockwise_spectrum(16, &[0, 3, 6, 9, 12], 1).unwrap();
        assert_eq!(s.values, vec![3, 3, 3, 3, 4]);
        assert_eq!(s.support(), vec![3, 4]);
        assert_eq!(s.sum(), 16);
        assert_eq!(clockwise_spectrum(6, &[0, 3], 1).unwrap().values, vec![3, 3]);
        let s2 = clockwise_spectrum(16, &[0, 3, 6, 9, 12], 2).unwrap();
        assert_eq!(s2.values, vec![6, 6, 6, 7, 7]);
        assert_eq!(s2.to_geodesic(16).values, vec![6, 6, 6, 7, 7]);
        let s3 = clockwise_spectrum(16, &[0, 3, 6, 9, 12], 3).unwrap();
        assert_eq!(s3.values, vec![9, 9, 10, 10, 10]);
        assert_eq!(s3.to_geodesic(16).values, vec![6, 6, 6, 7, 7]);
    }

    #[test]
    fn spectrum_errors() {
        assert!(clockwise_spectrum(8, &[0, 2], 2).is_err());
        assert!(clockwise_spectrum(8, &[0, 2], 0).is_err());
        assert!(clockwise_spectrum(8, &[3], 1).is_err());
        assert!(clockwise_spectrum(8, &[2, 1], 1).is_err());
        assert!(clockwise_spectrum(8, &[2, 8], 1).is_err());
    }

    #[test]
    fn evenness() {
        assert!(is_maximally_even(16, &[0, 3, 6, 9, 12]).unwrap());
        assert!(!is_maximally_even(8, &[0, 1, 4, 5]).unwrap());
        assert!(is_maximally_even(8, &[5]).unwrap());
        assert!(is_maximally_even(7, &[0, 2, 4]).unwrap());
        assert!(!is_maximally_even(7, &[0, 1, 2]).unwrap());
    }
}
