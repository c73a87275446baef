use crate::vertex_set::VertexSet;

/// A duplicate-free, sorted collection of vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SetCollection(Vec<VertexSet>);

impl SetCollection {
    pub fn new(mut sets: Vec<VertexSet>) -> Self {
        sets.sort();
        sets.dedup();
        SetCollection(sets)
    }

    /// `{∅}`, the identity for [`SetCollection::join`].
    pub fn unit() -> Self {
        SetCollection(vec![VertexSet::EMPTY])
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    /// `{A ∪ B : A ∈ self, B ∈ other}`.
    pub fn join(&self, other: &SetCollection) -> SetCollection {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                out.push(a.union(b));
            }
        }
        SetCollection::new(out)
    }

    pub fn union(&self, other: &SetCollection) -> SetCollection {
        SetCollection::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }
}

/// Join of a sequence of collections; the empty sequence gives `{∅}`.
pub fn join_all<'a, I: IntoIterator<Item = &'a SetCollection>>(collections: I) -> SetCollection {
    collections
        .into_iter()
        .fold(SetCollection::unit(), |acc, c| acc.join(c))
}

impl FromIterator<VertexSet> for SetCollection {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        SetCollection::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(sets: &[&[usize]]) -> SetCollection {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn join_examples() {
        let b = c(&[&[2], &[3]]);
        assert_eq!(SetCollection::unit().join(&b), b);
        assert_eq!(c(&[&[1]]).join(&b), c(&[&[1, 2], &[1, 3]]));
        let units = vec![SetCollection::unit(); 4];
        assert_eq!(join_all(&units), SetCollection::unit());
        assert_eq!(join_all(std::iter::empty()), SetCollection::unit());
    }

    #[test]
    fn dedup_after_join() {
        let a = c(&[&[1], &[1, 2]]);
        let b = c(&[&[2], &[]]);
        assert_eq!(a.join(&b), c(&[&[1], &[1, 2]]));
    }
}
