use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Coordinate axis, also used to name vector-field components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    /// The letter used for this component's coefficients: a, b or c.
    pub fn coefficient_letter(self) -> char {
        ['a', 'b', 'c'][self.index()]
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["x", "y", "z"][self.index()])
    }
}

/// `x^k1 y^k2 z^k3`.
///
/// Ordered graded-lexicographically with `x > y > z`: higher total degree is
/// larger, ties are broken by comparing `k1`, then `k2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(k1: u32, k2: u32, k3: u32) -> Self {
        Monomial([k1, k2, k3])
    }

    pub fn exps(&self) -> [u32; 3] {
        self.0
    }

    pub fn exp(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn times_axis(&self, axis: Axis) -> Monomial {
        let mut e = self.0;
        e[axis.index()] += 1;
        Monomial(e)
    }

    /// Exponent lowered along `axis`, or `None` when it is already zero.
    pub fn lowered(&self, axis: Axis) -> Option<Monomial> {
        let mut e = self.0;
        let k = &mut e[axis.index()];
        if *k == 0 {
            return None;
        }
        *k -= 1;
        Some(Monomial(e))
    }

    /// All monomials of degree `d`, largest first (`x^d, x^(d-1) y, ...`).
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
        for k1 in (0..=d).rev() {
            for k2 in (0..=d - k1).rev() {
                out.push(Monomial([k1, k2, d - k1 - k2]));
            }
        }
        out
    }

    /// Number of monomials of degree `d` in three variables.
    pub fn count_of_degree(d: u32) -> usize {
        ((d as usize + 1) * (d as usize + 2)) / 2
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[0].cmp(&other.0[0]))
            .then(self.0[1].cmp(&other.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for axis in Axis::ALL {
            let k = self.exp(axis);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{axis}")?;
            } else {
                write!(f, "{axis}^{k}")?;
            }
        }
        Ok(())
    }
}

/// One unknown coefficient: component `component` of `X_term_degree`
/// at `monomial`, i.e. `a^(k1,k2,k3)`, `b^(...)` or `c^(...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoefficientIndex {
    pub term_degree: u32,
    pub component: Axis,
    pub monomial: Monomial,
}

impl CoefficientIndex {
    pub fn new(component: Axis, monomial: Monomial) -> Self {
        CoefficientIndex { term_degree: monomial.degree(), component, monomial }
    }

    /// Unknowns of one homogeneous field of degree `d`: component-major,
    /// then monomials largest first.
    pub fn all_of_degree(d: u32) -> Vec<CoefficientIndex> {
        let monomials = Monomial::all_of_degree(d);
        Axis::ALL
            .iter()
            .flat_map(|&axis| monomials.iter().map(move |&m| CoefficientIndex::new(axis, m)))
            .collect()
    }
}

impl fmt::Display for CoefficientIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k1, k2, k3] = self.monomial.exps();
        write!(f, "{}^({k1},{k2},{k3})", self.component.coefficient_letter())
    }
}
