use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Variable block a ring variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// Parameters `z0, z1` of the projective line.
    Z,
    /// First covector `u0..un`.
    U,
    /// Second covector `v0..vn`.
    V,
    /// Degeneration parameter.
    Eps,
    /// Point coordinates `x0..xn`.
    X,
    /// Plücker coordinates `p_ij`.
    P,
    /// Scratch variables (e.g. a symbolic shear parameter).
    Aux,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Var {
    pub name: String,
    pub block: Block,
}

impl Var {
    pub fn new(name: impl Into<String>, block: Block) -> Self {
        Var {
            name: name.into(),
            block,
        }
    }
}

/// An ordered variable table. Slot order doubles as the significance order
/// of the graded-lexicographic monomial order: slot 0 is compared first.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<Var>,
}

impl Ring {
    pub fn new(vars: Vec<Var>) -> Arc<Ring> {
        Arc::new(Ring { vars })
    }

    /// The ring with no variables; its elements are plain scalars.
    pub fn scalars() -> Arc<Ring> {
        Ring::new(Vec::new())
    }

    /// `u0..un, v0..vn` and optionally a trailing `eps`.
    pub fn chow(n: usize, with_eps: bool) -> Arc<Ring> {
        let mut vars: Vec<Var> = (0..=n).map(|i| Var::new(format!("u{i}"), Block::U)).collect();
        vars.extend((0..=n).map(|i| Var::new(format!("v{i}"), Block::V)));
        if with_eps {
            vars.push(Var::new("eps", Block::Eps));
        }
        Ring::new(vars)
    }

    /// The univariate ring in `eps`.
    pub fn eps() -> Arc<Ring> {
        Ring::new(vec![Var::new("eps", Block::Eps)])
    }

    /// `x0..xn`.
    pub fn points(n: usize) -> Arc<Ring> {
        Ring::new((0..=n).map(|i| Var::new(format!("x{i}"), Block::X)).collect())
    }

    /// `z0, z1`.
    pub fn line_params() -> Arc<Ring> {
        Ring::new(vec![Var::new("z0", Block::Z), Var::new("z1", Block::Z)])
    }

    /// `p_ij` for `0 <= i < j <= n`, in lexicographic order of `(i, j)`.
    pub fn plucker(n: usize) -> Arc<Ring> {
        let mut vars = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                vars.push(Var::new(plucker_name(i, j), Block::P));
            }
        }
        Ring::new(vars)
    }

    /// A copy of this ring with `extra` appended as the last slot.
    pub fn extended(&self, extra: Var) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.push(extra);
        Ring::new(vars)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn block_slots(&self, block: Block) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.block == block)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_block(&self, block: Block) -> bool {
        self.vars.iter().any(|v| v.block == block)
    }
}

pub(crate) fn plucker_name(i: usize, j: usize) -> String {
    format!("p{i}{j}")
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(arity: usize, slot: usize) -> Self {
        let mut e = vec![0; arity];
        e[slot] = 1;
        Monomial::from_exponents(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree restricted to the given slots.
    pub fn degree_in(&self, slots: &[usize]) -> u32 {
        slots.iter().map(|&s| self.0[s]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(b, a)| b - a)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
