//! Relation algebra on act carriers.
//!
//! Equivalences are stored as [`Partition`]s in restricted-growth form: class
//! ids are numbered in order of each class's smallest member, so two equal
//! equivalences always have identical label vectors. A [`Congruence`] is a
//! partition that has been checked against an [`Act`].

use std::collections::BTreeSet;
use std::fmt;

use crate::act::{ActHom, Subact};
use crate::error::{Error, Result};
use crate::Act;

/// Largest carrier [`enumerate_congruences`] accepts by default.
pub const DEFAULT_CONGRUENCE_CAP: usize = 8;

/// An equivalence relation on `{0, …, n-1}` in canonical label form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
    classes: usize,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.classes())
    }
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
            classes: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    /// Normalizes arbitrary labels: `a` and `b` share a class iff
    /// `keys[a] == keys[b]`.
    pub fn from_labels<K: Ord + Clone>(keys: &[K]) -> Self {
        let mut seen = std::collections::BTreeMap::new();
        let labels = keys
            .iter()
            .map(|k| {
                let next = seen.len();
                *seen.entry(k.clone()).or_insert(next)
            })
            .collect();
        Partition {
            labels,
            classes: seen.len(),
        }
    }

    /// Kernel of a map given as a table of small indices.
    pub fn kernel_of(map: &[usize]) -> Self {
        let bound = map.iter().copied().max().map_or(0, |m| m + 1);
        let mut slot = vec![usize::MAX; bound];
        let mut classes = 0;
        let labels = map
            .iter()
            .map(|&v| {
                if slot[v] == usize::MAX {
                    slot[v] = classes;
                    classes += 1;
                }
                slot[v]
            })
            .collect();
        Partition { labels, classes }
    }

    /// Builds a partition from explicit classes, which must cover `0..n`
    /// exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut keys = vec![usize::MAX; n];
        for (id, class) in classes.iter().enumerate() {
            for &a in class {
                if a >= n || keys[a] != usize::MAX {
                    return Err(Error::BadShape {
                        expected: format!("classes partitioning 0..{n}"),
                        found: format!("element {a} out of range or repeated"),
                    });
                }
                keys[a] = id;
            }
        }
        if let Some(a) = keys.iter().position(|&k| k == usize::MAX) {
            return Err(Error::BadShape {
                expected: format!("classes partitioning 0..{n}"),
                found: format!("element {a} missing"),
            });
        }
        Ok(Partition::kernel_of(&keys))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.labels[a]
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes == self.labels.len()
    }

    pub fn is_universal(&self) -> bool {
        self.classes <= 1
    }

    /// Classes in label order; each class is sorted, so the first member is
    /// the smallest.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (a, &l) in self.labels.iter().enumerate() {
            out[l].push(a);
        }
        out
    }

    /// Smallest member of every class, in label order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = Vec::with_capacity(self.classes);
        for (a, &l) in self.labels.iter().enumerate() {
            if l == reps.len() {
                reps.push(a);
            }
        }
        reps
    }

    /// Containment as relations: every pair related by `self` is related by
    /// `other`.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.classes];
        self.labels
            .iter()
            .zip(&other.labels)
            .all(|(&mine, &theirs)| match image[mine] {
                usize::MAX => {
                    image[mine] = theirs;
                    true
                }
                seen => seen == theirs,
            })
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let pairs: Vec<(usize, usize)> = self
            .labels
            .iter()
            .copied()
            .zip(other.labels.iter().copied())
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let reps = p.representatives();
            for (a, &l) in p.labels.iter().enumerate() {
                uf.union(a, reps[l]);
            }
        }
        uf.into_partition()
    }

    pub fn to_relation(&self) -> Relation {
        let n = self.len();
        let mut r = Relation::new(n);
        for class in self.classes() {
            for &a in &class {
                for &b in &class {
                    r.insert(a, b);
                }
            }
        }
        r
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns `true` if two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|a| self.find(a)).collect();
        Partition::kernel_of(&roots)
    }
}

/// A binary relation on `{0, …, n-1}`, one bit per pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl Relation {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Relation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::new(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn diagonal(n: usize) -> Self {
        Relation::from_pairs(n, (0..n).map(|a| (a, a)))
    }

    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "pair ({a}, {b}) out of range");
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            (0..self.n)
                .filter(move |&b| self.contains(a, b))
                .map(move |b| (a, b))
        })
    }

    pub fn union(&self, other: &Relation) -> Relation {
        assert_eq!(self.n, other.n);
        Relation {
            n: self.n,
            words: self.words,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(x, y)| x | y)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0)
    }
}

/// A partition of an act's carrier that is compatible with the action.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    act: Act,
    partition: Partition,
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence{:?}", self.partition)
    }
}

impl PartialOrd for Congruence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Congruence {
    /// Finer congruences first, then by label vector.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .partition
            .num_classes()
            .cmp(&self.partition.num_classes())
            .then_with(|| self.partition.cmp(&other.partition))
    }
}

impl Congruence {
    pub fn new(act: &Act, partition: Partition) -> Result<Self> {
        if partition.len() != act.size() {
            return Err(Error::ParentMismatch(partition.len(), act.size()));
        }
        check_compatible(act, &partition)?;
        Ok(Congruence {
            act: act.clone(),
            partition,
        })
    }

    /// Skips the compatibility check in release builds.
    pub(crate) fn new_trusted(act: &Act, partition: Partition) -> Self {
        debug_assert!(check_compatible(act, &partition).is_ok());
        Congruence {
            act: act.clone(),
            partition,
        }
    }

    pub fn diagonal(act: &Act) -> Self {
        Congruence::new_trusted(act, Partition::discrete(act.size()))
    }

    pub fn universal(act: &Act) -> Self {
        Congruence::new_trusted(act, Partition::universal(act.size()))
    }

    pub fn act(&self) -> &Act {
        &self.act
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.partition.classes()
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.partition.related(a, b)
    }

    pub fn is_diagonal(&self) -> bool {
        self.partition.is_discrete()
    }

    pub fn is_universal(&self) -> bool {
        self.partition.is_universal()
    }

    pub fn is_subset(&self, other: &Congruence) -> bool {
        self.partition.is_finer_than(&other.partition)
    }

    fn same_parent(&self, other: &Congruence) -> Result<()> {
        if self.act != other.act {
            return Err(Error::ParentMismatch(self.act.size(), other.act.size()));
        }
        Ok(())
    }

    pub fn meet(&self, other: &Congruence) -> Result<Congruence> {
        self.same_parent(other)?;
        Ok(Congruence::new_trusted(
            &self.act,
            self.partition.meet(&other.partition),
        ))
    }

    /// Least congruence containing both. The equivalence join of two
    /// congruences is already action-compatible, so no translation step is
    /// needed here.
    pub fn join(&self, other: &Congruence) -> Result<Congruence> {
        self.same_parent(other)?;
        Ok(Congruence::new_trusted(
            &self.act,
            self.partition.join(&other.partition),
        ))
    }
}

fn check_compatible(act: &Act, partition: &Partition) -> Result<()> {
    for class in partition.classes() {
        let Some((&first, rest)) = class.split_first() else {
            continue;
        };
        for &b in rest {
            for s in act.monoid().elements() {
                if !partition.related(act.act(first, s), act.act(b, s)) {
                    return Err(Error::NotACongruence { a: first, b, s });
                }
            }
        }
    }
    Ok(())
}

/// Least congruence containing `relation`.
///
/// The set `{(a·s, b·s) : (a, b) ∈ R, s ∈ S}` is already closed under
/// translation (`a·s·t = a·(st)`), so its equivalence closure is the answer and
/// one sweep of unions reaches the fixpoint.
pub fn congruence_closure(act: &Act, relation: &Relation) -> Result<Congruence> {
    if relation.carrier() != act.size() {
        return Err(Error::ParentMismatch(relation.carrier(), act.size()));
    }
    let mut uf = UnionFind::new(act.size());
    for (a, b) in relation.pairs() {
        for s in act.monoid().elements() {
            uf.union(act.act(a, s), act.act(b, s));
        }
    }
    Ok(Congruence::new_trusted(act, uf.into_partition()))
}

/// Congruence generated by the single pair `(a, b)`.
pub fn principal_congruence(act: &Act, a: usize, b: usize) -> Congruence {
    let mut uf = UnionFind::new(act.size());
    for s in act.monoid().elements() {
        uf.union(act.act(a, s), act.act(b, s));
    }
    Congruence::new_trusted(act, uf.into_partition())
}

/// `K_f = {(a, b) : f(a) = f(b)}` on the source of `f`.
pub fn kernel_congruence(f: &ActHom) -> Congruence {
    Congruence::new_trusted(f.source(), Partition::kernel_of(f.map()))
}

/// `I_f = (im f × im f) ∪ Δ` for an endomorphism `f`.
pub fn image_congruence(f: &ActHom) -> Result<Congruence> {
    if !f.is_endomorphism() {
        return Err(Error::SourceTargetMismatch(
            "image congruence needs an endomorphism".into(),
        ));
    }
    let mut in_image = vec![false; f.source().size()];
    for &b in f.map() {
        in_image[b] = true;
    }
    Ok(Congruence::new_trusted(f.source(), collapse(&in_image)))
}

/// Rees congruence `ρ_B`: `B` collapsed to one class, everything else alone.
pub fn rees_congruence(act: &Act, subact: &Subact) -> Congruence {
    let mut member = vec![false; act.size()];
    for &b in subact.members() {
        member[b] = true;
    }
    Congruence::new_trusted(act, collapse(&member))
}

fn collapse(member: &[bool]) -> Partition {
    let first = member.iter().position(|&m| m).unwrap_or(usize::MAX);
    let keys: Vec<usize> = member
        .iter()
        .enumerate()
        .map(|(a, &m)| if m { first } else { a })
        .collect();
    Partition::kernel_of(&keys)
}

/// All congruences of `act`, finest first (see [`Congruence`]'s ordering).
pub fn enumerate_congruences(act: &Act) -> Result<Vec<Congruence>> {
    enumerate_congruences_capped(act, DEFAULT_CONGRUENCE_CAP)
}

/// Every congruence is the join of the principal congruences below it, so
/// closing `{Δ} ∪ principals` under joins with principals reaches all of them.
pub fn enumerate_congruences_capped(act: &Act, cap: usize) -> Result<Vec<Congruence>> {
    let n = act.size();
    if n > cap {
        return Err(Error::CarrierTooLarge { size: n, cap });
    }
    let principals: BTreeSet<Partition> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| principal_congruence(act, a, b).into_partition())
        .collect();

    let mut found: BTreeSet<Partition> = principals.clone();
    found.insert(Partition::discrete(n));
    let mut frontier: Vec<Partition> = principals.iter().cloned().collect();
    while let Some(current) = frontier.pop() {
        for p in &principals {
            if p.is_finer_than(&current) {
                continue;
            }
            let joined = current.join(p);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut all: Vec<Congruence> = found
        .into_iter()
        .map(|p| Congruence::new_trusted(act, p))
        .collect();
    all.sort();
    Ok(all)
}

/// Number of elements in a longest chain of the list under containment.
pub fn longest_chain(congruences: &[Congruence]) -> usize {
    let mut order: Vec<&Congruence> = congruences.iter().collect();
    order.sort();
    let mut best = vec![1usize; order.len()];
    for i in 0..order.len() {
        for j in 0..i {
            if order[j] != order[i] && order[j].is_subset(order[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::act::Act;
    use crate::monoid::{zmod_index, zmod_mult_monoid, Monoid};
    use std::sync::Arc;

    fn m2() -> Arc<Monoid> {
        Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap())
    }

    fn a2() -> Act {
        Act::new(m2(), &[vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn z4() -> (Act, impl Fn(usize) -> usize) {
        (Act::regular(Arc::new(zmod_mult_monoid(4))), |r| {
            zmod_index(4, r)
        })
    }

    #[test]
    fn partition_normal_form() {
        let p = Partition::from_labels(&['b', 'a', 'b', 'c']);
        assert_eq!(p.labels(), &[0, 1, 0, 2]);
        assert_eq!(p.classes(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(
            Partition::from_classes(4, &[vec![3], vec![1], vec![2, 0]]).unwrap(),
            p
        );
        assert!(Partition::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(Partition::discrete(4).is_finer_than(&p));
        assert!(!p.is_finer_than(&Partition::discrete(4)));
        assert_eq!(p.meet(&Partition::universal(4)), p);
        assert_eq!(p.join(&Partition::discrete(4)), p);
    }

    #[test]
    fn relation_bits() {
        let mut r = Relation::new(70);
        r.insert(3, 69);
        r.insert(69, 3);
        assert!(r.contains(3, 69) && r.contains(69, 3) && !r.contains(3, 3));
        assert_eq!(r.len(), 2);
        assert!(Relation::diagonal(70)
            .union(&r)
            .is_subset(&Partition::universal(70).to_relation()));
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(3, 69), (69, 3)]);
    }

    #[test]
    fn closures() {
        let a = a2();
        let empty = Relation::new(2);
        assert!(congruence_closure(&a, &empty).unwrap().is_diagonal());
        let xy = Relation::from_pairs(2, [(0, 1)]);
        assert!(congruence_closure(&a, &xy).unwrap().is_universal());

        let (z, idx) = z4();
        let c = congruence_closure(&z, &Relation::from_pairs(4, [(idx(1), idx(3))])).unwrap();
        assert_eq!(c.num_classes(), 3);
        assert!(c.related(idx(1), idx(3)));
        assert!(!c.related(idx(0), idx(2)));
    }

    #[test]
    fn kernels_images_and_rees() {
        let (z, idx) = z4();
        let lambda2 = ActHom::left_translation(&z, idx(2));
        let k = kernel_congruence(&lambda2);
        assert_eq!(k.partition(), &z.monoid().right_relation(idx(2)));
        let i = image_congruence(&lambda2).unwrap();
        assert_eq!(i.num_classes(), 3);
        assert!(i.related(idx(0), idx(2)));
        let sub = Subact::new(&z, vec![idx(0), idx(2)]).unwrap();
        assert_eq!(rees_congruence(&z, &sub), i);

        let a = a2();
        let cy = ActHom::new(&a, &a, vec![1, 1]).unwrap();
        assert!(kernel_congruence(&cy).is_universal());
        assert!(image_congruence(&cy).unwrap().is_diagonal());
        assert!(image_congruence(&ActHom::identity(&a))
            .unwrap()
            .is_universal());
        assert!(kernel_congruence(&ActHom::identity(&a)).is_diagonal());
        assert!(rees_congruence(&a, &Subact::new(&a, vec![1]).unwrap()).is_diagonal());
        assert!(rees_congruence(&a, &Subact::whole(&a)).is_universal());
    }

    #[test]
    fn lattice_operations() {
        let (z, idx) = z4();
        let lambda2 = ActHom::left_translation(&z, idx(2));
        let k = kernel_congruence(&lambda2);
        let i = image_congruence(&lambda2).unwrap();
        assert_eq!(k.join(&i).unwrap(), k);
        assert_eq!(Congruence::diagonal(&z).join(&i).unwrap(), i);
        assert_eq!(Congruence::universal(&z).meet(&i).unwrap(), i);
        let a = a2();
        assert!(matches!(
            Congruence::diagonal(&a).join(&i),
            Err(Error::ParentMismatch(2, 4))
        ));
    }

    #[test]
    fn enumeration_examples() {
        let single = Act::regular(Arc::new(Monoid::trivial()));
        assert_eq!(enumerate_congruences(&single).unwrap().len(), 1);

        let three = Act::new(Arc::new(Monoid::trivial()), &[vec![0], vec![1], vec![2]]).unwrap();
        let all = enumerate_congruences(&three).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(longest_chain(&all), 3);

        let a = a2();
        let all = enumerate_congruences(&a).unwrap();
        assert_eq!(
            all,
            vec![Congruence::diagonal(&a), Congruence::universal(&a)]
        );

        let big = Act::new(
            Arc::new(Monoid::trivial()),
            &(0..9).map(|a| vec![a]).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(matches!(
            enumerate_congruences(&big),
            Err(Error::CarrierTooLarge { size: 9, cap: 8 })
        ));
    }

    #[test]
    fn partition_that_is_not_a_congruence() {
        let (z, idx) = z4();
        let mut keys = vec![0; 4];
        keys[idx(1)] = 1;
        keys[idx(2)] = 1;
        keys[idx(0)] = 2;
        keys[idx(3)] = 3;
        // {1,2} related forces {1·2, 2·2} = {2, 0} related
        assert!(matches!(
            Congruence::new(&z, Partition::from_labels(&keys)),
            Err(Error::NotACongruence { .. })
        ));
    }
}
