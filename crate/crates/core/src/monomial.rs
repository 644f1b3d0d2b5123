//! Exponent vectors and admissible monomial orderings.
//!
//! An `ExpVec` stores `[total_degree, e_1, ..., e_n]` in one small vector.
//! Caching the total degree in slot 0 makes the derived lexicographic `Ord`
//! coincide with graded lex under the natural variable priority, so a
//! `BTreeMap<ExpVec, _>` is automatically held in canonical term order.

use smallvec::SmallVec;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(SmallVec<[u16; 16]>);

impl ExpVec {
    pub fn zero(nvars: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, nvars + 1))
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut v = SmallVec::with_capacity(exps.len() + 1);
        v.push(exps.iter().map(|&e| e as u64).sum::<u64>() as u16);
        v.extend_from_slice(exps);
        ExpVec(v)
    }

    /// The monomial `x_i` in `nvars` variables.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut v = Self::zero(nvars);
        v.0[0] = 1;
        v.0[i + 1] = 1;
        v
    }

    pub fn nvars(&self) -> usize {
        self.0.len() - 1
    }

    pub fn total_degree(&self) -> usize {
        self.0[0] as usize
    }

    pub fn exp(&self, var: usize) -> u16 {
        self.0[var + 1]
    }

    pub fn exps(&self) -> &[u16] {
        &self.0[1..]
    }

    pub fn is_unit(&self) -> bool {
        self.0[0] == 0
    }

    /// Product of monomials (exponent-wise sum).
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut v = self.0.clone();
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        ExpVec(v)
    }

    /// Exact quotient of monomials, if `other` divides `self`.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut v = self.0.clone();
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= *b;
        }
        Some(ExpVec(v))
    }

    pub fn pow(&self, k: u16) -> Self {
        let mut v = self.0.clone();
        for a in v.iter_mut() {
            *a = a.checked_mul(k).expect("exponent overflow");
        }
        ExpVec(v)
    }

    /// Total degree restricted to `vars ∈ [lo, hi)`.
    pub fn block_degree(&self, lo: usize, hi: usize) -> usize {
        self.0[lo + 1..hi + 1].iter().map(|&e| e as usize).sum()
    }

    /// Rebuild with a different ambient size, placing the exponents at `offset`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Self {
        let mut exps = vec![0u16; new_nvars];
        exps[offset..offset + self.nvars()].copy_from_slice(self.exps());
        Self::from_exps(&exps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    GradedLex,
    Lex,
}

/// Admissible monomial ordering: graded lex or pure lex, with an explicit
/// variable priority (a permutation; earlier entries are compared first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MOrder {
    pub fn graded_lex(nvars: usize) -> Self {
        MOrder { kind: OrderKind::GradedLex, priority: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        MOrder { kind: OrderKind::Lex, priority: (0..nvars).collect() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            assert!(p < priority.len() && !seen[p], "priority must be a permutation");
            seen[p] = true;
        }
        MOrder { kind, priority }
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        if self.kind == OrderKind::GradedLex {
            match a.total_degree().cmp(&b.total_degree()) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        for &v in &self.priority {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}
