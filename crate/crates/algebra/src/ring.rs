use std::fmt;
use std::sync::Arc;

use crate::field::{Field, DEFAULT_PRIME};
use crate::monomial::{Monomial, MAX_VARS};
use crate::AlgebraError;

/// Work limits. Exceeding any of them is a hard [`AlgebraError::Budget`] error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    /// S-pairs processed by one Groebner computation, or syzygy pairs per resolution.
    pub max_pairs: usize,
    /// Terms in any intermediate polynomial or module vector.
    pub max_terms: usize,
    /// Total degree of any S-pair lcm.
    pub max_degree: u32,
    /// Elements of one resolution level, or basis vectors of one Koszul strand.
    pub max_basis: usize,
    /// Division steps spent reducing one polynomial.
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 2_000_000,
            max_terms: 500_000,
            max_degree: 100,
            max_basis: 200_000,
            max_steps: 50_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `x_1..x_n, y_1..y_n`.
    Binomial {
        n: usize,
    },
    /// `x_{ij}` for `i <= m`, `j <= n`, row-major.
    Pair {
        m: usize,
        n: usize,
    },
    Custom,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
    field: Field,
    kind: RingKind,
    budget: Budget,
}

/// A polynomial ring over GF(p). Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({})[{}]",
            self.0.field.characteristic(),
            self.0.names.join(",")
        )
    }
}

impl Ring {
    fn build(names: Vec<String>, p: u32, kind: RingKind) -> Result<Ring, AlgebraError> {
        if names.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables {
                nvars: names.len(),
                max: MAX_VARS,
            });
        }
        let field = Field::new(p)?;
        Ok(Ring(Arc::new(RingData {
            names,
            field,
            kind,
            budget: Budget::default(),
        })))
    }

    /// `K[x_1..x_n, y_1..y_n]` with `x_i` in slot `i-1` and `y_i` in slot `n+i-1`.
    pub fn binomial(n: usize, p: u32) -> Result<Ring, AlgebraError> {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect();
        Ring::build(names, p, RingKind::Binomial { n })
    }

    pub fn binomial_default(n: usize) -> Result<Ring, AlgebraError> {
        Ring::binomial(n, DEFAULT_PRIME)
    }

    /// `K[x_{ij}]` for a generic `m x n` matrix; `x_{ij}` is named `x{i}_{j}`.
    pub fn pair(m: usize, n: usize, p: u32) -> Result<Ring, AlgebraError> {
        let names = (1..=m)
            .flat_map(|i| (1..=n).map(move |j| format!("x{i}_{j}")))
            .collect();
        Ring::build(names, p, RingKind::Pair { m, n })
    }

    pub fn custom<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        p: u32,
    ) -> Result<Ring, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(AlgebraError::Parse("duplicate variable names".into()));
        }
        Ring::build(names, p, RingKind::Custom)
    }

    pub fn with_budget(&self, budget: Budget) -> Ring {
        Ring(Arc::new(RingData {
            budget,
            ..RingData::clone_of(&self.0)
        }))
    }

    /// Same ring in another characteristic.
    pub fn with_prime(&self, p: u32) -> Result<Ring, AlgebraError> {
        let field = Field::new(p)?;
        Ok(Ring(Arc::new(RingData {
            field,
            ..RingData::clone_of(&self.0)
        })))
    }

    /// This ring plus one variable in the next free slot.
    pub(crate) fn with_extra_var(&self, name: &str) -> Result<Ring, AlgebraError> {
        let mut names = self.0.names.clone();
        names.push(name.to_string());
        let mut r = Ring::build(names, self.0.field.characteristic(), RingKind::Custom)?;
        Arc::get_mut(&mut r.0).expect("fresh ring").budget = self.0.budget;
        Ok(r)
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    pub fn kind(&self) -> RingKind {
        self.0.kind
    }

    pub fn budget(&self) -> Budget {
        self.0.budget
    }

    /// Graph vertex count of a binomial ring.
    pub fn vertex_count(&self) -> Option<usize> {
        match self.0.kind {
            RingKind::Binomial { n } => Some(n),
            _ => None,
        }
    }

    /// Slot of `x_i`, `1 <= i <= n`. Panics outside a binomial ring or range.
    pub fn x(&self, i: usize) -> usize {
        let n = self.vertex_count().expect("x_i needs a binomial ring");
        assert!((1..=n).contains(&i), "x_{i} out of range");
        i - 1
    }

    pub fn y(&self, i: usize) -> usize {
        let n = self.vertex_count().expect("y_i needs a binomial ring");
        assert!((1..=n).contains(&i), "y_{i} out of range");
        n + i - 1
    }

    /// Slot of `x_{ij}` in a pair ring.
    pub fn matrix_var(&self, i: usize, j: usize) -> usize {
        let RingKind::Pair { m, n } = self.0.kind else {
            panic!("x_ij needs a pair ring")
        };
        assert!(
            (1..=m).contains(&i) && (1..=n).contains(&j),
            "x_{i}{j} out of range"
        );
        (i - 1) * n + (j - 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|v| v == name)
    }

    /// Additive grading key in byte lanes. Binomial rings use the vertex
    /// degrees `deg x_i + deg y_i` plus the total x-degree; pair rings use row
    /// and column degrees; otherwise the total degree.
    pub fn fine_key(&self, m: Monomial) -> u128 {
        match self.0.kind {
            RingKind::Binomial { n } => {
                let p = m.packed();
                let lanes = (1u128 << (8 * n)) - 1;
                let xs = p & lanes;
                let ys = (p >> (8 * n)) & lanes;
                (xs + ys) | (Monomial::from_packed(xs).degree() as u128) << (8 * n)
            }
            RingKind::Pair { m: rows, n: cols } if rows + cols <= MAX_VARS => {
                let mut key = 0u128;
                for i in 0..rows {
                    for j in 0..cols {
                        let e = m.exponent(i * cols + j) as u128;
                        key += e << (8 * i);
                        key += e << (8 * (rows + j));
                    }
                }
                key
            }
            _ => m.degree() as u128,
        }
    }
}

impl RingData {
    fn clone_of(d: &RingData) -> RingData {
        RingData {
            names: d.names.clone(),
            field: d.field,
            kind: d.kind,
            budget: d.budget,
        }
    }
}
