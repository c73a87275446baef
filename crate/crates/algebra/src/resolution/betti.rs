use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Graded Betti numbers `β_{i,j}`, `i` homological and `j` internal degree.
/// Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "BTreeMap<String, u64>", try_from = "BTreeMap<String, u64>")]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl From<BettiTable> for BTreeMap<String, u64> {
    fn from(t: BettiTable) -> Self {
        t.entries
            .into_iter()
            .map(|((i, j), v)| (format!("{i},{j}"), v))
            .collect()
    }
}

impl TryFrom<BTreeMap<String, u64>> for BettiTable {
    type Error = String;

    fn try_from(map: BTreeMap<String, u64>) -> Result<Self, Self::Error> {
        let mut t = BettiTable::new();
        for (k, v) in map {
            let (i, j) = k
                .split_once(',')
                .ok_or_else(|| format!("bad Betti key {k:?}"))?;
            let i = i
                .trim()
                .parse()
                .map_err(|e| format!("bad Betti key {k:?}: {e}"))?;
            let j = j
                .trim()
                .parse()
                .map_err(|e| format!("bad Betti key {k:?}: {e}"))?;
            t.set(i, j, v);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    /// The table of `S/(0) = S`.
    pub fn of_ring() -> BettiTable {
        let mut t = BettiTable::new();
        t.set(0, 0, 1);
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max {j - i : β_{i,j} != 0}`.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    fn is_ring_table(&self) -> bool {
        *self == BettiTable::of_ring()
    }

    /// Regularity of `S/I` for the table of `S/I`.
    pub fn reg_quotient(&self) -> Option<i64> {
        self.reg()
    }

    /// Regularity of `I`: `reg(S/I) + 1`, and `0` for the zero ideal.
    pub fn reg_ideal(&self) -> Option<i64> {
        if self.is_ring_table() {
            return Some(0);
        }
        self.reg().map(|r| r + 1)
    }

    pub fn pd_quotient(&self) -> Option<usize> {
        self.pd()
    }

    /// `pd(S/I) - 1`; `None` for the zero and the unit ideal.
    pub fn pd_ideal(&self) -> Option<usize> {
        if self.is_ring_table() {
            return None;
        }
        self.pd().and_then(|p| p.checked_sub(1))
    }

    /// Numbers of the ideal: `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    pub fn ideal_view(&self) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .filter(|(k, _)| k.0 > 0)
            .map(|(&(i, j), &v)| ((i - 1, j), v))
            .collect();
        BettiTable { entries }
    }

    /// Entrywise `self <= other`.
    pub fn le_entrywise(&self, other: &BettiTable) -> bool {
        self.iter().all(|((i, j), v)| v <= other.get(i, j))
    }

    /// Linear strand of an ideal table: `β_{i,i+d}` for the generating degree `d`.
    pub fn strand(&self, shift: usize) -> Vec<u64> {
        let top = self.pd().unwrap_or(0);
        (0..=top).map(|i| self.get(i, i + shift)).collect()
    }

    /// Coefficients of `Σ_{i,j} (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series.
    pub fn hilbert_numerator(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for ((i, j), v) in self.iter() {
            let s = if i % 2 == 0 { v as i64 } else { -(v as i64) };
            *out.entry(j).or_insert(0) += s;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Macaulay-style triangle: row `r` lists `β_{i,i+r}`.
    pub fn triangle(&self) -> String {
        let Some(pd) = self.pd() else {
            return "(zero module)\n".into();
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self
                .entries
                .keys()
                .map(|&(i, j)| j as i64 - i as i64)
                .collect();
            r.sort();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().expect("nonempty"));
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let width = self
            .iter()
            .map(|(_, v)| v.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let mut s = String::new();
        let _ = write!(s, "{:>7}", "");
        for i in 0..=pd {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = write!(s, "{:>7}", "total:");
        for i in 0..=pd {
            let _ = write!(s, " {:>width$}", self.total(i));
        }
        s.push('\n');
        for r in lo..=hi {
            let _ = write!(s, "{:>7}", format!("{r}:"));
            for i in 0..=pd {
                let j = i as i64 + r;
                let v = if j < 0 { 0 } else { self.get(i, j as usize) };
                let _ = write!(s, " {:>width$}", cell(v));
            }
            s.push('\n');
        }
        s
    }
}
