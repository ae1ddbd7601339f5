use num_bigint::BigInt;

use super::inverse::{inverse_relation_roundtrip, sample_sequences, InverseKind};
use super::{poly_ids, q_ids, series_ids, Bounds, Point, Residual};
use crate::algebra::Polynomial;

/// A range parameter of a catalogue entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    N,
    M,
    Order,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n-max",
            Param::M => "m-max",
            Param::Order => "order",
        }
    }
}

/// One catalogue entry. The defaults double as cutoffs.
#[derive(Clone, Copy)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub order: Option<usize>,
    pub(crate) points: fn(Bounds) -> Vec<Point>,
}

impl IdentityInfo {
    pub fn default(&self, p: Param) -> Option<usize> {
        match p {
            Param::N => self.n,
            Param::M => self.m,
            Param::Order => self.order,
        }
    }

    pub fn is_series(&self) -> bool {
        self.order.is_some()
    }
}

impl std::fmt::Debug for IdentityInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityInfo")
            .field("id", &self.id)
            .field("n", &self.n)
            .field("m", &self.m)
            .field("order", &self.order)
            .finish()
    }
}

fn inverse_points(kind: InverseKind, len: usize) -> Vec<Point> {
    sample_sequences(len + 1)
        .into_iter()
        .map(|(name, mut a)| {
            if kind == InverseKind::Tree {
                a.remove(0);
            }
            Point::new(format!("a={name},len={}", a.len()), None, move || {
                let back = inverse_relation_roundtrip(kind, &a);
                Ok(Residual::parts(a.iter().zip(&back).enumerate().map(|(i, (x, y))| {
                    (format!("a[{i}]"), Polynomial::from(x - y as &BigInt))
                })))
            })
        })
        .collect()
}

macro_rules! entry {
    ($id:expr, $title:expr, n = $n:expr, m = $m:expr, order = $o:expr, $points:expr) => {
        IdentityInfo {
            id: $id,
            title: $title,
            n: $n,
            m: $m,
            order: $o,
            points: $points,
        }
    };
}

fn poly(id: &'static str, title: &'static str, n: usize) -> IdentityInfo {
    fn dispatch(id: &str) -> fn(Bounds) -> Vec<Point> {
        macro_rules! ids {
            ($($s:literal),*) => {
                match id {
                    $($s => |b| poly_ids::points($s, b),)*
                    _ => unreachable!(),
                }
            };
        }
        ids!(
            "1.0a",
            "1.0b",
            "1.0c",
            "1.0d",
            "1.0e",
            "charlier-spec",
            "riordan",
            "sunxu",
            "thm1.1",
            "2.3a",
            "2.4",
            "3.1",
            "3.3",
            "4.1",
            "4.2",
            "cor-selfdual",
            "4.3",
            "difference",
            "4.3a",
            "4.4",
            "4.5",
            "remark-mu",
            "cor-n-factorial",
            "thm5.2"
        )
    }
    entry!(id, title, n = Some(n), m = None, order = None, dispatch(id))
}

fn series(id: &'static str, title: &'static str, m: Option<usize>, order: usize) -> IdentityInfo {
    fn dispatch(id: &str) -> fn(Bounds) -> Vec<Point> {
        macro_rules! ids {
            ($($s:literal),*) => {
                match id {
                    $($s => |b| series_ids::points($s, b),)*
                    _ => unreachable!(),
                }
            };
        }
        ids!(
            "2.1",
            "2.2",
            "2.3",
            "3.2",
            "thm1.2",
            "3.4",
            "3.5",
            "3.6",
            "3.7",
            "3.7.1",
            "gessel",
            "chz",
            "bell-transform",
            "3.8",
            "3.9"
        )
    }
    entry!(id, title, n = None, m = m, order = Some(order), dispatch(id))
}

fn q(id: &'static str, title: &'static str, n: usize) -> IdentityInfo {
    fn dispatch(id: &str) -> fn(Bounds) -> Vec<Point> {
        macro_rules! ids {
            ($($s:literal),*) => {
                match id {
                    $($s => |b| q_ids::points($s, b),)*
                    _ => unreachable!(),
                }
            };
        }
        ids!("5.1", "5.2", "q-second", "q-diag", "q-explicit", "5.3", "5.4")
    }
    entry!(id, title, n = Some(n), m = None, order = None, dispatch(id))
}

/// Every catalogued identity, in a fixed order.
pub fn catalogue() -> &'static [IdentityInfo] {
    static CATALOGUE: std::sync::OnceLock<Vec<IdentityInfo>> = std::sync::OnceLock::new();
    CATALOGUE.get_or_init(|| {
        vec![
            poly("1.0a", "f_n(λ+μ) = Σ C(n,k) f_k(λ) μ^{n-k}", 15),
            poly("1.0b", "f_n(λ) = Σ C(n,k) k! (λ-1)^{n-k}", 20),
            poly("1.0c", "f_n(λ) = n f_{n-1}(λ) + (λ-1)^n", 20),
            poly("1.0d", "d/dλ f_n(λ) = n f_{n-1}(λ)", 12),
            poly("1.0e", "f_n(λ) = Σ C(n,k) D_k λ^{n-k}", 15),
            poly("charlier-spec", "f_n(λ) = C_n(1, λ-1)", 10),
            poly("riordan", "Σ C(n,k) (k+1)! (n+1)^{n-k} = (n+1)^{n+1}", 12),
            poly("sunxu", "Σ C(n,k) D_{k+1} (n+1)^{n-k} = n^{n+1}", 12),
            poly("thm1.1", "Σ C(n,k) f_{k+1}(λ) (n+1)^{n-k} = (n+λ)^{n+1}", 15),
            series("2.1", "y^k/k! = Σ C(n-1,k-1) n^{n-k} x^n/n!", None, 8),
            series("2.2", "e^{λy}/(1-y) = Σ (n+λ)^n x^n/n!", None, 8),
            series("2.3", "Σ f_n(λ) t^n/n! = e^{(λ-1)t}/(1-t)", None, 10),
            poly("2.3a", "Σ_{k>=1} C(n-1,k-1) f_k(λ) n^{n-k} = (n+λ-1)^n", 12),
            poly("2.4", "f_n(λ) = (D+λ)^n umbrally", 10),
            poly("3.1", "(a+b)^n = Σ C(n,k) a(a-kt)^{k-1} (b+kt)^{n-k}", 8),
            series("3.2", "A(x) = Σ x(x-kt)^{k-1} A^{(k)}(kt)/k!", None, 8),
            poly("3.3", "(D+λ)(D+λ+n+1)^n = (n+λ)^{n+1} umbrally", 10),
            series(
                "thm1.2",
                "Σ a_n f_n(λ) x^n/n! = Σ (k+λ-1)^k x^k A^{(k)}(-kx)/k!",
                None,
                8,
            ),
            series("3.4", "Charlier transform", None, 6),
            series("3.5", "shifted Charlier transform", Some(3), 6),
            series("3.6", "Σ D_{m+n} D_n x^n/n!", Some(3), 6),
            series("3.7", "OGFs of f_{m+n}(μ) and D_{m+n}", Some(3), 6),
            series("3.7.1", "OGFs of (m+n)! and f_n(λ)", Some(3), 8),
            series("gessel", "bilinear Charlier generating function", None, 5),
            series("chz", "Σ f_n(μ) x^n = Σ k! x^k/(1-(μ-1)x)^{k+1}", None, 8),
            series("bell-transform", "Bell transform", Some(3), 6),
            series("3.8", "OGF of the Bell numbers B_{m+n}", Some(3), 6),
            series("3.9", "Hermite transform with involution and matching OGFs", Some(3), 6),
            poly("4.1", "Σ C(n,k) f_k(λ) (μ+k-n) μ^{n-k} = μ(λ+μ-1)^n", 12),
            poly(
                "4.2",
                "Σ C(n,k) f_k(λ) f_{n-k}(μ+1) = (λ+μ-1)^{n+1} + (n-λ-μ+2) f_n(λ+μ)",
                12,
            ),
            poly("cor-selfdual", "Σ C(n,k) f_k(λ) f_{n-k}(n-λ+3) = (n+1)^{n+1}", 10),
            poly("4.3", "f_n(λ+μ) = Σ C(n,k) (λ+k)^k (μ-k-1)^{n-k}", 12),
            poly("difference", "Σ (-1)^{n-k} C(n,k) (λ+k)^n = n!", 12),
            poly("4.3a", "D_n = Σ (-1)^{n-k} C(n,k) (λ+k)^k (λ+k+1)^{n-k}", 12),
            poly(
                "4.4",
                "Σ C(n,k) f_{k+1}(λ) μ^{n-k} = Σ C(n,k) (λ+k)^{k+1} (μ-n-1) (μ-k-1)^{n-k-1}",
                10,
            ),
            poly(
                "4.5",
                "Σ C(n,k) f_{k+1}(λ) f_{n-k}(μ+1) = Σ C(n,k) (λ+k)^{k+1} (μ-k-1)^{n-k}",
                10,
            ),
            poly("remark-mu", "μ = n+1 in the Abel-type expansion", 10),
            entry!(
                "stirling-difference",
                "Σ (-1)^{n-k} C(n,k) (λ+k)^m = Σ (-1)^k S(m,k) (-k)_n (-λ)_{k-n}",
                n = Some(6),
                m = Some(8),
                order = None,
                |b| poly_ids::points("stirling-difference", b)
            ),
            poly(
                "cor-n-factorial",
                "Σ C(n,k) f_{k+1}(λ) (1-λ)^{n-k} = n!(λ+n) and companion",
                12,
            ),
            q("5.1", "Q_{n,m} = n Q_{n-1,m} + m Q_{n,m-1} + (λ-1)^m (λ+μ-1)^n", 10),
            q("5.2", "bivariate EGF of Q_{n,m}", 10),
            q("q-second", "Q_{n+1,m} = Q_{n,m+1} + μ Q_{n,m}", 10),
            q("q-diag", "Σ C(N,n) Q_{N-n,n} t^{N-n} = (t+1)^N f_N(λ + μt/(t+1))", 8),
            q("q-explicit", "explicit double sum for Q_{n,m}", 10),
            q("5.3", "Q_{n,m}(λ,μ) = m Q_{n,m-1}(λ, D+μ+1) + (λ-1)^m f_n(λ+μ)", 10),
            q(
                "5.4",
                "Q_{n,m} = m Σ C(n,k) f_{k+m-1}(λ) f_{n-k}(μ+1) + (λ-1)^m f_n(λ+μ)",
                10,
            ),
            poly(
                "thm5.2",
                "Σ C(n,k) f_{k+2}(λ) μ^{n-k} = Σ C(n,k) (λ^2+2k+1) (λ+k)^k (μ-k-1)^{n-k}",
                8,
            ),
            entry!(
                "inverse-derangement",
                "b_n = Σ C(n,k) D_{n-k} a_k inverted by a_n = Σ C(n,k) (1+k-n) b_k",
                n = Some(10),
                m = None,
                order = None,
                |b| inverse_points(InverseKind::Derangement, b.n)
            ),
            entry!(
                "inverse-tree",
                "b_n = Σ C(n-1,k-1) n^{n-k} a_k inverted by a_n = Σ (-1)^{n-k} C(n,k) k^{n-k} b_k",
                n = Some(10),
                m = None,
                order = None,
                |b| inverse_points(InverseKind::Tree, b.n)
            ),
        ]
    })
}

pub fn lookup(id: &str) -> Option<&'static IdentityInfo> {
    catalogue().iter().find(|i| i.id == id)
}
