use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::sequences::{binomial, derangement};

/// The two inverse pairs of sequence transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    /// `b_n = Σ C(n,k) D_{n-k} a_k  ⇔  a_n = Σ C(n,k) (1+k-n) b_k`.
    Derangement,
    /// `b_n = Σ C(n-1,k-1) n^{n-k} a_k  ⇔  a_n = Σ (-1)^{n-k} C(n,k) k^{n-k} b_k`,
    /// on sequences indexed from 1.
    Tree,
}

impl InverseKind {
    pub const ALL: [InverseKind; 2] = [InverseKind::Derangement, InverseKind::Tree];

    pub fn tag(self) -> &'static str {
        match self {
            InverseKind::Derangement => "derangement-4.1",
            InverseKind::Tree => "tree-4.4",
        }
    }

    /// The forward transform.
    pub fn forward(self, a: &[BigInt]) -> Vec<BigInt> {
        match self {
            InverseKind::Derangement => (0..a.len())
                .map(|n| (0..=n).map(|k| binomial(n, k) * derangement(n - k) * &a[k]).sum())
                .collect(),
            InverseKind::Tree => (1..=a.len())
                .map(|n| {
                    (1..=n)
                        .map(|k| binomial(n - 1, k - 1) * BigInt::from(n).pow((n - k) as u32) * &a[k - 1])
                        .sum()
                })
                .collect(),
        }
    }

    /// The stated inverse of [`InverseKind::forward`].
    pub fn inverse(self, b: &[BigInt]) -> Vec<BigInt> {
        match self {
            InverseKind::Derangement => (0..b.len())
                .map(|n| {
                    (0..=n)
                        .map(|k| binomial(n, k) * BigInt::from(1 + k as i64 - n as i64) * &b[k])
                        .sum()
                })
                .collect(),
            InverseKind::Tree => (1..=b.len())
                .map(|n| {
                    (1..=n)
                        .map(|k| {
                            let term = binomial(n, k) * BigInt::from(k).pow((n - k) as u32) * &b[k - 1];
                            if (n - k) % 2 == 1 {
                                -term
                            } else {
                                term
                            }
                        })
                        .sum()
                })
                .collect(),
        }
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for InverseKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| format!("unknown inverse relation `{s}`"))
    }
}

/// Applies the forward transform and then its inverse.
pub fn inverse_relation_roundtrip(kind: InverseKind, a: &[BigInt]) -> Vec<BigInt> {
    kind.inverse(&kind.forward(a))
}

/// Deterministic test sequences for the catalogue: a unit vector, the
/// factorials, all ones and a scrambled signed sequence.
pub(crate) fn sample_sequences(len: usize) -> Vec<(&'static str, Vec<BigInt>)> {
    let unit = (0..len).map(|k| BigInt::from(u8::from(k == 0))).collect();
    let fact = (0..len).map(crate::sequences::factorial).collect();
    let ones = vec![BigInt::from(1); len];
    let mixed = (0..len as i64)
        .map(|k| BigInt::from((7 * k * k - 3 * k + 5) % 23 - 11))
        .collect();
    vec![("unit", unit), ("factorial", fact), ("ones", ones), ("mixed", mixed)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unit_sequence() {
        let a = ints(&[1, 0, 0, 0, 0]);
        assert_eq!(InverseKind::Derangement.forward(&a), ints(&[1, 0, 1, 2, 9]));
        assert_eq!(inverse_relation_roundtrip(InverseKind::Derangement, &a), a);
    }

    #[test]
    fn factorial_input() {
        let a: Vec<BigInt> = (0..=10).map(crate::sequences::factorial).collect();
        let b = InverseKind::Derangement.forward(&a);
        assert_eq!(&b[..5], &ints(&[1, 1, 3, 11, 53])[..]);
        assert_eq!(InverseKind::Derangement.inverse(&b), a);
    }

    #[test]
    fn tree_kind_on_ones() {
        let a = vec![BigInt::from(1); 8];
        let b = InverseKind::Tree.forward(&a);
        // Σ_k C(n-1,k-1) n^{n-k} = (n+1)^{n-1}
        let want: Vec<BigInt> = (1..=8u32).map(|n| BigInt::from(n + 1).pow(n - 1)).collect();
        assert_eq!(b, want);
        assert_eq!(InverseKind::Tree.inverse(&b), a);
    }

    #[test]
    fn tags_round_trip() {
        for k in InverseKind::ALL {
            assert_eq!(k.tag().parse::<InverseKind>().unwrap(), k);
        }
        assert!("nope".parse::<InverseKind>().is_err());
    }
}
