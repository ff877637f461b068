//! Finite right acts, their subacts and homomorphisms, and factor acts.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::congruence::{Congruence, Partition};
use crate::error::{Error, Result};
use crate::monoid::Monoid;

struct ActData {
    monoid: Arc<Monoid>,
    size: usize,
    /// `a·s` at `a * |S| + s`.
    table: Vec<usize>,
}

/// A finite right act over a monoid. Cloning is cheap.
#[derive(Clone)]
pub struct Act(Arc<ActData>);

impl fmt::Debug for Act {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Act")
            .field("size", &self.size())
            .field("rows", &self.rows())
            .finish()
    }
}

impl PartialEq for Act {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.size == other.0.size
                && self.0.table == other.0.table
                && self.0.monoid == other.0.monoid)
    }
}

impl Eq for Act {}

impl Hash for Act {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.size.hash(state);
        self.0.table.hash(state);
    }
}

impl PartialOrd for Act {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Act {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.monoid().size(),
            self.monoid().table(),
            self.0.size,
            &self.0.table,
        )
            .cmp(&(
                other.monoid().size(),
                other.monoid().table(),
                other.0.size,
                &other.0.table,
            ))
    }
}

/// Checks both act axioms for a `size`×`|S|` table.
pub fn validate_act(monoid: Arc<Monoid>, size: usize, rows: &[Vec<usize>]) -> Result<Act> {
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    let n = monoid.size();
    if rows.len() != size {
        return Err(Error::BadShape {
            expected: format!("{size} rows"),
            found: format!("{} rows", rows.len()),
        });
    }
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::BadShape {
                expected: format!("{n} entries in row {row}"),
                found: format!("{}", entries.len()),
            });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(Error::EntryOutOfRange {
                row,
                col,
                value,
                bound: size,
            });
        }
    }
    for (a, row) in rows.iter().enumerate() {
        if row[monoid.identity()] != a {
            return Err(Error::IdentityAxiomFails { a });
        }
    }
    for (a, row) in rows.iter().enumerate() {
        for s in 0..n {
            for t in 0..n {
                if row[monoid.mul(s, t)] != rows[row[s]][t] {
                    return Err(Error::AssociativityAxiomFails { a, s, t });
                }
            }
        }
    }
    Ok(Act::from_table_unchecked(monoid, size, rows.concat()))
}

impl Act {
    pub fn new(monoid: Arc<Monoid>, rows: &[Vec<usize>]) -> Result<Act> {
        validate_act(monoid, rows.len(), rows)
    }

    /// `S` acting on itself by right multiplication.
    pub fn regular(monoid: Arc<Monoid>) -> Act {
        let size = monoid.size();
        let table = monoid.table().to_vec();
        Act::from_table_unchecked(monoid, size, table)
    }

    pub(crate) fn from_table_unchecked(monoid: Arc<Monoid>, size: usize, table: Vec<usize>) -> Act {
        debug_assert_eq!(table.len(), size * monoid.size());
        Act(Arc::new(ActData {
            monoid,
            size,
            table,
        }))
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.0.monoid
    }

    #[inline]
    pub fn act(&self, a: usize, s: usize) -> usize {
        self.0.table[a * self.0.monoid.size() + s]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.0
            .table
            .chunks(self.0.monoid.size())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub(crate) fn table(&self) -> &[usize] {
        &self.0.table
    }

    pub fn same_monoid(&self, other: &Act) -> bool {
        Arc::ptr_eq(self.monoid(), other.monoid()) || self.monoid() == other.monoid()
    }

    /// The cyclic subact `a·S`, sorted.
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.monoid().elements().map(|s| self.act(a, s)).collect();
        set.into_iter().collect()
    }

    fn orbit_mask(&self, a: usize) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        for s in self.monoid().elements() {
            mask[self.act(a, s)] = true;
        }
        mask
    }

    pub fn is_closed(&self, members: &[usize]) -> bool {
        self.closure_violation(members).is_none()
    }

    fn closure_violation(&self, members: &[usize]) -> Option<Error> {
        let mut inside = vec![false; self.size()];
        for &b in members {
            inside[b] = true;
        }
        for &b in members {
            for s in self.monoid().elements() {
                let image = self.act(b, s);
                if !inside[image] {
                    return Some(Error::NotASubact { b, s, image });
                }
            }
        }
        None
    }

    /// Smallest subact containing `generators`, i.e. `⋃ x·S`.
    pub fn subact_generated(&self, generators: &[usize]) -> Result<Subact> {
        if generators.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut inside = vec![false; self.size()];
        for &x in generators {
            if x >= self.size() {
                return Err(Error::EntryOutOfRange {
                    row: 0,
                    col: 0,
                    value: x,
                    bound: self.size(),
                });
            }
            for s in self.monoid().elements() {
                inside[self.act(x, s)] = true;
            }
        }
        Ok(Subact::from_mask(&inside))
    }

    /// A generating set of minimum size; among those, the lexicographically
    /// smallest.
    ///
    /// Elements `a`, `b` are mutually reachable when `b ∈ a·S` and `a ∈ b·S`.
    /// A generating set needs one element from every reachability class that
    /// nothing outside it reaches, and those classes' smallest members suffice.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let n = self.size();
        let reach: Vec<Vec<bool>> = (0..n).map(|a| self.orbit_mask(a)).collect();
        (0..n)
            .filter(|&a| {
                let is_source = (0..n).all(|c| !reach[c][a] || reach[a][c]);
                let is_smallest = (0..a).all(|b| !(reach[a][b] && reach[b][a]));
                is_source && is_smallest
            })
            .collect()
    }

    /// Elements fixed by the whole monoid.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| self.monoid().elements().all(|s| self.act(a, s) == a))
            .collect()
    }

    /// Every subact, ordered by size and then by member list.
    pub fn subacts(&self) -> Vec<Subact> {
        let cyclic: BTreeSet<Vec<usize>> = (0..self.size()).map(|a| self.orbit(a)).collect();
        let mut found: BTreeSet<Vec<usize>> = cyclic.clone();
        let mut frontier: Vec<Vec<usize>> = cyclic.iter().cloned().collect();
        while let Some(current) = frontier.pop() {
            for c in &cyclic {
                let union: BTreeSet<usize> = current.iter().chain(c).copied().collect();
                let union: Vec<usize> = union.into_iter().collect();
                if found.insert(union.clone()) {
                    frontier.push(union);
                }
            }
        }
        let mut all: Vec<Subact> = found
            .into_iter()
            .map(|members| Subact {
                carrier: self.size(),
                members,
            })
            .collect();
        all.sort();
        all
    }

    /// The subact as an act in its own right (members relabeled `0..k` in
    /// increasing order) together with its inclusion into `self`.
    pub fn restrict(&self, subact: &Subact) -> (Act, ActHom) {
        let mut position = vec![usize::MAX; self.size()];
        for (i, &b) in subact.members().iter().enumerate() {
            position[b] = i;
        }
        let table: Vec<usize> = subact
            .members()
            .iter()
            .flat_map(|&b| self.monoid().elements().map(move |s| (b, s)))
            .map(|(b, s)| position[self.act(b, s)])
            .collect();
        let part = Act::from_table_unchecked(self.monoid().clone(), subact.len(), table);
        let inclusion = ActHom::new_unchecked(&part, self, subact.members().to_vec());
        (part, inclusion)
    }

    /// Rees factor act `A/B`: the class of `B` is element 0, the remaining
    /// elements follow in their original order.
    pub fn rees_quotient(&self, subact: &Subact) -> (Act, ActHom) {
        let mut map = vec![0; self.size()];
        let mut next = 1;
        for (a, slot) in map.iter_mut().enumerate() {
            if !subact.contains(a) {
                *slot = next;
                next += 1;
            }
        }
        self.quotient_along(map, next)
    }

    /// Factor act `A/ρ`; classes are numbered in order of their smallest
    /// member.
    pub fn quotient_by_congruence(&self, rho: &Partition) -> Result<(Act, ActHom)> {
        let c = Congruence::new(self, rho.clone())?;
        Ok(self.quotient(&c))
    }

    pub fn quotient(&self, rho: &Congruence) -> (Act, ActHom) {
        let p = rho.partition();
        self.quotient_along(p.labels().to_vec(), p.num_classes())
    }

    fn quotient_along(&self, map: Vec<usize>, classes: usize) -> (Act, ActHom) {
        let n = self.monoid().size();
        let mut table = vec![usize::MAX; classes * n];
        for (a, &class) in map.iter().enumerate() {
            for s in 0..n {
                table[class * n + s] = map[self.act(a, s)];
            }
        }
        let factor = Act::from_table_unchecked(self.monoid().clone(), classes, table);
        let projection = ActHom::new_unchecked(self, &factor, map);
        (factor, projection)
    }

    /// Table after renaming element `a` to `perm[a]`.
    pub(crate) fn relabeled_table(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.monoid().size();
        let mut out = vec![0; self.size() * n];
        for a in 0..self.size() {
            for s in 0..n {
                out[perm[a] * n + s] = perm[self.act(a, s)];
            }
        }
        out
    }

    /// A carrier bijection commuting with the action, if one exists.
    pub fn isomorphism_to(&self, other: &Act) -> Option<Vec<usize>> {
        if self.size() != other.size() || !self.same_monoid(other) {
            return None;
        }
        let mut found = None;
        for_each_permutation(self.size(), |perm| {
            if self.relabeled_table(perm) == other.table() {
                found = Some(perm.to_vec());
                true
            } else {
                false
            }
        });
        found
    }

    /// `true` iff every endomorphism maps `subact` into itself.
    pub fn is_fully_invariant(&self, subact: &Subact) -> Result<bool> {
        let endos = crate::endo::endomorphisms(self)?;
        Ok(endos.iter().all(|f| {
            subact
                .members()
                .iter()
                .all(|&b| subact.contains(f.apply(b)))
        }))
    }
}

/// Calls `visit` with every permutation of `0..n` (Heap's algorithm) until it
/// returns `true`.
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0; n];
    if visit(&perm) {
        return;
    }
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            if visit(&perm) {
                return;
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// A non-empty subset of an act's carrier closed under the action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subact {
    carrier: usize,
    members: Vec<usize>,
}

impl PartialOrd for Subact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subact {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl Subact {
    pub fn new(act: &Act, members: Vec<usize>) -> Result<Subact> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        let members: Vec<usize> = set.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if let Some(&bad) = members.iter().find(|&&b| b >= act.size()) {
            return Err(Error::EntryOutOfRange {
                row: 0,
                col: 0,
                value: bad,
                bound: act.size(),
            });
        }
        if let Some(err) = act.closure_violation(&members) {
            return Err(err);
        }
        Ok(Subact {
            carrier: act.size(),
            members,
        })
    }

    pub fn whole(act: &Act) -> Subact {
        Subact {
            carrier: act.size(),
            members: (0..act.size()).collect(),
        }
    }

    fn from_mask(mask: &[bool]) -> Subact {
        Subact {
            carrier: mask.len(),
            members: (0..mask.len()).filter(|&a| mask[a]).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.carrier
    }
}

/// An equivariant map between two acts over the same monoid. Composition is
/// read right to left: `(g∘f)(a) = g(f(a))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ActHom {
    source: Act,
    target: Act,
    map: Vec<usize>,
}

impl fmt::Debug for ActHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActHom{:?}", self.map)
    }
}

impl PartialOrd for ActHom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ActHom {
    /// Lexicographic in the map table.
    fn cmp(&self, other: &Self) -> Ordering {
        self.map
            .cmp(&other.map)
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

/// An [`ActHom`] whose source and target coincide.
pub type Endomorphism = ActHom;

impl ActHom {
    pub fn new(source: &Act, target: &Act, map: Vec<usize>) -> Result<ActHom> {
        if !source.same_monoid(target) {
            return Err(Error::MonoidMismatch);
        }
        if map.len() != source.size() {
            return Err(Error::BadShape {
                expected: format!("{} images", source.size()),
                found: format!("{}", map.len()),
            });
        }
        if let Some((a, &value)) = map.iter().enumerate().find(|(_, &b)| b >= target.size()) {
            return Err(Error::EntryOutOfRange {
                row: 0,
                col: a,
                value,
                bound: target.size(),
            });
        }
        for a in 0..source.size() {
            for s in source.monoid().elements() {
                if map[source.act(a, s)] != target.act(map[a], s) {
                    return Err(Error::NotEquivariant { a, s });
                }
            }
        }
        Ok(ActHom::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: &Act, target: &Act, map: Vec<usize>) -> ActHom {
        ActHom {
            source: source.clone(),
            target: target.clone(),
            map,
        }
    }

    pub fn identity(act: &Act) -> ActHom {
        ActHom::new_unchecked(act, act, (0..act.size()).collect())
    }

    /// `λ_s : x ↦ s·x` on the regular act.
    ///
    /// # Panics
    /// If `regular` is not the regular act of its monoid.
    pub fn left_translation(regular: &Act, s: usize) -> ActHom {
        assert_eq!(
            regular,
            &Act::regular(regular.monoid().clone()),
            "left translations live on the regular act"
        );
        let m = regular.monoid();
        ActHom::new_unchecked(
            regular,
            regular,
            m.elements().map(|x| m.mul(s, x)).collect(),
        )
    }

    pub fn source(&self) -> &Act {
        &self.source
    }

    pub fn target(&self) -> &Act {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map
            .iter()
            .all(|&b| !std::mem::replace(&mut seen[b], true))
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Sorted set-image.
    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.map.iter().copied().collect();
        set.into_iter().collect()
    }

    /// The image as a subact of the target; closed by equivariance.
    pub fn image_subact(&self) -> Subact {
        let members = self.image();
        debug_assert!(self.target.is_closed(&members));
        Subact {
            carrier: self.target.size(),
            members,
        }
    }

    /// `g∘f`, defined when `f`'s target is `g`'s source.
    pub fn compose(g: &ActHom, f: &ActHom) -> Result<ActHom> {
        if f.target != g.source {
            return Err(Error::SourceTargetMismatch(
                "target of the inner map differs from the source of the outer map".into(),
            ));
        }
        Ok(ActHom::new_unchecked(
            &f.source,
            &g.target,
            f.map.iter().map(|&b| g.map[b]).collect(),
        ))
    }

    /// `f^n` for an endomorphism and `n >= 1`.
    pub fn power(&self, n: usize) -> Result<ActHom> {
        if !self.is_endomorphism() {
            return Err(Error::SourceTargetMismatch(
                "only endomorphisms have powers".into(),
            ));
        }
        if n == 0 {
            return Err(Error::BadShape {
                expected: "exponent >= 1".into(),
                found: "0".into(),
            });
        }
        let mut map = self.map.clone();
        for _ in 1..n {
            map = map.iter().map(|&b| self.map[b]).collect();
        }
        Ok(ActHom::new_unchecked(&self.source, &self.target, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{kernel_congruence, Partition};
    use crate::monoid::{zmod_index, zmod_mult_monoid};

    fn m2() -> Arc<Monoid> {
        Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap())
    }

    /// x = 0, y = 1, x·e = y, y·e = y.
    fn a2() -> Act {
        Act::new(m2(), &[vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn act_axioms() {
        assert_eq!(a2().size(), 2);
        assert_eq!(
            Act::new(m2(), &[vec![0, 1], vec![1, 0]]).unwrap_err(),
            Error::AssociativityAxiomFails { a: 0, s: 1, t: 1 }
        );
        assert_eq!(
            Act::new(m2(), &[vec![1, 1], vec![1, 1]]).unwrap_err(),
            Error::IdentityAxiomFails { a: 0 }
        );
        assert!(matches!(
            Act::new(m2(), &[vec![0, 2], vec![1, 1]]),
            Err(Error::EntryOutOfRange { .. })
        ));
        let trivial = Arc::new(Monoid::trivial());
        assert!(Act::new(trivial, &[vec![0], vec![1], vec![2]]).is_ok());
        assert_eq!(Act::new(m2(), &[]).unwrap_err(), Error::EmptyCarrier);
    }

    #[test]
    fn regular_acts() {
        let single = Act::regular(Arc::new(Monoid::trivial()));
        assert_eq!(single.size(), 1);
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        assert_eq!(z4.act(zmod_index(4, 2), zmod_index(4, 2)), zmod_index(4, 0));
        let r = Act::regular(m2());
        assert_eq!(r.rows(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn composition_and_powers() {
        let a = a2();
        let id = ActHom::identity(&a);
        assert_eq!(id.power(7).unwrap(), id);
        let cy = ActHom::new(&a, &a, vec![1, 1]).unwrap();
        assert_eq!(cy.power(2).unwrap(), cy);
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let l2 = ActHom::left_translation(&z4, zmod_index(4, 2));
        let l0 = ActHom::left_translation(&z4, zmod_index(4, 0));
        assert_eq!(l2.power(2).unwrap(), l0);
        assert!(matches!(
            ActHom::compose(&l2, &cy),
            Err(Error::SourceTargetMismatch(_))
        ));
        assert!(matches!(
            ActHom::new(&a, &a, vec![1, 0]),
            Err(Error::NotEquivariant { .. })
        ));
    }

    #[test]
    fn images_and_generation() {
        let a = a2();
        assert_eq!(ActHom::identity(&a).image_subact().members(), &[0, 1]);
        let cy = ActHom::new(&a, &a, vec![1, 1]).unwrap();
        assert_eq!(cy.image_subact().members(), &[1]);
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let l2 = ActHom::left_translation(&z4, zmod_index(4, 2));
        let mut expected = vec![zmod_index(4, 0), zmod_index(4, 2)];
        expected.sort();
        assert_eq!(l2.image_subact().members(), expected.as_slice());

        assert_eq!(a.subact_generated(&[0]).unwrap().members(), &[0, 1]);
        assert_eq!(
            z4.subact_generated(&[zmod_index(4, 2)]).unwrap().members(),
            expected.as_slice()
        );
        assert_eq!(a.minimal_generating_set(), vec![0]);
        assert_eq!(z4.minimal_generating_set(), vec![0]);
    }

    #[test]
    fn fully_invariant_subacts() {
        let a = a2();
        assert!(a
            .is_fully_invariant(&Subact::new(&a, vec![1]).unwrap())
            .unwrap());
        assert!(a.is_fully_invariant(&Subact::whole(&a)).unwrap());
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let b = Subact::new(&z4, vec![zmod_index(4, 0), zmod_index(4, 2)]).unwrap();
        assert!(z4.is_fully_invariant(&b).unwrap());
    }

    #[test]
    fn rees_quotients() {
        let a = a2();
        let (q, pi) = a.rees_quotient(&Subact::new(&a, vec![1]).unwrap());
        assert_eq!(q.size(), 2);
        // [B] = 0, x = 1, x·e = [B]
        assert_eq!(pi.map(), &[1, 0]);
        assert_eq!(q.act(1, 1), 0);
        let (q, _) = a.rees_quotient(&Subact::whole(&a));
        assert_eq!(q.size(), 1);
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let b = Subact::new(&z4, vec![zmod_index(4, 0), zmod_index(4, 2)]).unwrap();
        assert_eq!(z4.rees_quotient(&b).0.size(), 3);
    }

    #[test]
    fn quotients_by_congruences() {
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let (q, pi) = z4.quotient_by_congruence(&Partition::discrete(4)).unwrap();
        assert_eq!(q, z4);
        assert!(pi.is_bijective());
        let (q, _) = z4.quotient_by_congruence(&Partition::universal(4)).unwrap();
        assert_eq!(q.size(), 1);
        let r2 = z4.monoid().right_relation(zmod_index(4, 2));
        let (q, pi) = z4.quotient_by_congruence(&r2).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(kernel_congruence(&pi).partition(), &r2);
        let bad = Partition::from_classes(4, &[vec![0, 2], vec![1], vec![3]]).unwrap();
        assert!(matches!(
            z4.quotient_by_congruence(&bad),
            Err(Error::NotACongruence { .. })
        ));
    }

    #[test]
    fn permutations_are_complete() {
        let mut seen = BTreeSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
            false
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn subact_enumeration() {
        let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
        let subs = z4.subacts();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0].members(), &[zmod_index(4, 0)]);
        let a = a2();
        assert_eq!(a.subacts().len(), 2);
    }
}
