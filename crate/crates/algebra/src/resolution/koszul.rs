//! Betti numbers as Koszul homology: `β_{i,κ}(S/I) = dim H_i(K(x) ⊗ S/I)_κ`,
//! with `S/I` spanned by the standard monomials of a degrevlex basis.
//!
//! Only the degrees of the lcm lattice of `in(I)` can carry Betti numbers
//! (upper semicontinuity plus the Taylor resolution), so those are the only
//! strands computed.

use std::collections::{BTreeSet, HashMap};

use crate::linalg::rank_sparse;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::betti::BettiTable;
use crate::resolution::schreyer::{choose_grading, grading_key, Grading};
use crate::ring::Ring;
use crate::{AlgebraError, Ideal};

/// Largest variable count accepted by [`koszul_betti_oracle`].
pub const MAX_KOSZUL_VARS: usize = 10;

struct Strand<'a> {
    ring: &'a Ring,
    grading: Grading,
    gb: &'a [Polynomial],
    leads: Vec<Monomial>,
    nf_cache: HashMap<Monomial, Vec<(Monomial, u32)>>,
}

impl Strand<'_> {
    fn key(&self, m: Monomial) -> (u32, u128) {
        grading_key(self.ring, self.grading, m)
    }

    fn is_standard(&self, m: Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    /// Standard monomials of degree `deg` and grading key `key`.
    fn standard_monomials(&self, deg: u32, key: u128) -> Vec<Monomial> {
        let n = self.ring.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        self.fill(0, deg, key, &mut exps, &mut out);
        out
    }

    fn fill(&self, var: usize, left: u32, key: u128, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if var == n - 1 {
            exps[var] = left;
            let m = Monomial::from_exponents(exps).expect("small exponents");
            if self.key(m).1 == key && self.is_standard(m) {
                out.push(m);
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            let partial = Monomial::from_exponents(&exps[..=var]).expect("small exponents");
            if self.grading == Grading::Fine && !lanes_le(self.ring.fine_key(partial), key) {
                break;
            }
            if !self.is_standard(partial) {
                break;
            }
            self.fill(var + 1, left - e, key, exps, out);
        }
        exps[var] = 0;
    }

    fn normal_form(&mut self, m: Monomial) -> Result<Vec<(Monomial, u32)>, AlgebraError> {
        if let Some(v) = self.nf_cache.get(&m) {
            return Ok(v.clone());
        }
        let p = Polynomial::monomial(self.ring, m, 1).normal_form(self.gb)?;
        let v = p.terms().to_vec();
        self.nf_cache.insert(m, v.clone());
        Ok(v)
    }
}

fn lanes_le(a: u128, b: u128) -> bool {
    (0..16).all(|k| (a >> (8 * k)) & 0xFF <= (b >> (8 * k)) & 0xFF)
}

fn subset_monomial(set: u32) -> Monomial {
    (0..32)
        .filter(|k| set >> k & 1 == 1)
        .fold(Monomial::ONE, |m, k| m.mul(Monomial::var(k)))
}

/// Graded Betti numbers of `S/I` from Koszul homology, for at most
/// [`MAX_KOSZUL_VARS`] variables and a homogeneous ideal.
pub fn koszul_betti_oracle(ideal: &Ideal) -> Result<BettiTable, AlgebraError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > MAX_KOSZUL_VARS {
        return Err(AlgebraError::TooManyVariables {
            nvars: n,
            max: MAX_KOSZUL_VARS,
        });
    }
    let grading = choose_grading(ideal)?;
    let gb = ideal.gb()?;
    if gb.is_empty() {
        return Ok(BettiTable::of_ring());
    }
    if gb[0].is_constant() {
        return Ok(BettiTable::new());
    }
    let budget = ring.budget();
    let mut strand = Strand {
        ring,
        grading,
        gb,
        leads: gb.iter().filter_map(Polynomial::lead_monomial).collect(),
        nf_cache: HashMap::new(),
    };

    let mut lattice: BTreeSet<Monomial> = BTreeSet::from([Monomial::ONE]);
    for &l in &strand.leads {
        let grown: Vec<Monomial> = lattice.iter().map(|&m| m.lcm(l)).collect();
        lattice.extend(grown);
        if lattice.len() > budget.max_basis {
            return Err(AlgebraError::Budget {
                what: "lcm lattice size",
                limit: budget.max_basis,
            });
        }
    }
    let degrees: BTreeSet<(u32, u128)> = lattice.iter().map(|&m| strand.key(m)).collect();

    let mut subsets_by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for set in 0u32..(1 << n) {
        subsets_by_size[set.count_ones() as usize].push(set);
    }

    let mut table = BettiTable::new();
    for (deg, key) in degrees {
        // chain groups C_i: pairs (A, u) with x_A * u in degree (deg, key)
        let mut groups: Vec<Vec<(u32, Monomial)>> = Vec::with_capacity(n + 1);
        for (i, sets) in subsets_by_size.iter().enumerate() {
            let mut basis = Vec::new();
            if i as u32 <= deg {
                for &a in sets {
                    let xa = subset_monomial(a);
                    let (_, ka) = strand.key(xa);
                    if grading == Grading::Fine && !lanes_le(ka, key) {
                        continue;
                    }
                    let rest = if grading == Grading::Fine {
                        key - ka
                    } else {
                        0
                    };
                    for u in strand.standard_monomials(deg - i as u32, rest) {
                        basis.push((a, u));
                    }
                }
            }
            if basis.len() > budget.max_basis {
                return Err(AlgebraError::Budget {
                    what: "Koszul strand dimension",
                    limit: budget.max_basis,
                });
            }
            groups.push(basis);
        }
        // rank of d_i : C_i -> C_{i-1}
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n {
            if groups[i].is_empty() || groups[i - 1].is_empty() {
                continue;
            }
            let index: HashMap<(u32, Monomial), usize> = groups[i - 1]
                .iter()
                .enumerate()
                .map(|(r, &b)| (b, r))
                .collect();
            let f = ring.field();
            let mut entries = Vec::new();
            for (col, &(a, u)) in groups[i].iter().enumerate() {
                let mut sign_pos = 0;
                for v in 0..n {
                    if a >> v & 1 == 0 {
                        continue;
                    }
                    let sign = if sign_pos % 2 == 0 { 1 } else { f.neg(1) };
                    sign_pos += 1;
                    for (w, c) in strand.normal_form(u.mul(Monomial::var(v)))? {
                        let row = index[&(a & !(1 << v), w)];
                        entries.push((row, col, f.mul(sign, c)));
                    }
                }
            }
            ranks[i] = rank_sparse(groups[i - 1].len(), groups[i].len(), &entries, f);
        }
        for i in 0..=n {
            let h = groups[i].len() - ranks[i] - ranks[i + 1];
            table.add(i, deg as usize, h as u64);
        }
    }
    Ok(table)
}
