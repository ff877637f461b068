//! Homomorphism enumeration and endomorphism monoids.

use std::collections::HashMap;

use crate::act::{Act, ActHom};
use crate::error::{Error, Result};
use crate::monoid::Monoid;

/// Backtracking nodes allowed per enumeration by default.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// All homomorphisms `source -> target`, lexicographic in the map table.
pub fn homomorphisms(source: &Act, target: &Act) -> Result<Vec<ActHom>> {
    homomorphisms_with_budget(source, target, DEFAULT_SEARCH_BUDGET)
}

/// Backtracks over the images of a minimal generating set. Fixing the image
/// `b` of a generator `g` forces `g·s ↦ b·s` for every `s`; a clash with an
/// earlier forced value prunes the branch.
pub fn homomorphisms_with_budget(source: &Act, target: &Act, budget: u64) -> Result<Vec<ActHom>> {
    if !source.same_monoid(target) {
        return Err(Error::MonoidMismatch);
    }
    let generators = source.minimal_generating_set();
    let mut search = Search {
        source,
        target,
        generators: &generators,
        assigned: vec![usize::MAX; source.size()],
        nodes: 0,
        budget,
        found: Vec::new(),
    };
    search.descend(0)?;
    let mut found = search.found;
    found.sort();
    Ok(found
        .into_iter()
        .map(|map| ActHom::new_unchecked(source, target, map))
        .collect())
}

struct Search<'a> {
    source: &'a Act,
    target: &'a Act,
    generators: &'a [usize],
    assigned: Vec<usize>,
    nodes: u64,
    budget: u64,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> Result<()> {
        if depth == self.generators.len() {
            if self.equivariant() {
                self.found.push(self.assigned.clone());
            }
            return Ok(());
        }
        let g = self.generators[depth];
        let monoid = self.source.monoid().clone();
        for b in 0..self.target.size() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded {
                    budget: self.budget,
                });
            }
            let mut newly = Vec::new();
            let mut clash = false;
            for s in monoid.elements() {
                let a = self.source.act(g, s);
                let image = self.target.act(b, s);
                match self.assigned[a] {
                    usize::MAX => {
                        self.assigned[a] = image;
                        newly.push(a);
                    }
                    prior if prior != image => {
                        clash = true;
                        break;
                    }
                    _ => {}
                }
            }
            if !clash {
                self.descend(depth + 1)?;
            }
            for a in newly {
                self.assigned[a] = usize::MAX;
            }
        }
        Ok(())
    }

    fn equivariant(&self) -> bool {
        let f = &self.assigned;
        (0..self.source.size()).all(|a| {
            f[a] != usize::MAX
                && self
                    .source
                    .monoid()
                    .elements()
                    .all(|s| f[self.source.act(a, s)] == self.target.act(f[a], s))
        })
    }
}

/// All endomorphisms, lexicographic in the map table.
pub fn endomorphisms(act: &Act) -> Result<Vec<ActHom>> {
    homomorphisms(act, act)
}

/// `End(A)` under composition.
///
/// Element 0 is the identity; the remaining endomorphisms follow in
/// lexicographic map order. `monoid().mul(g, f)` is the index of `g∘f`, so on a
/// regular act `λ_a∘λ_b = λ_{ab}`.
#[derive(Debug, Clone)]
pub struct EndMonoid {
    act: Act,
    elements: Vec<ActHom>,
    monoid: Monoid,
    index: HashMap<Vec<usize>, usize>,
}

pub fn end_monoid(act: &Act) -> Result<EndMonoid> {
    end_monoid_with_budget(act, DEFAULT_SEARCH_BUDGET)
}

pub fn end_monoid_with_budget(act: &Act, budget: u64) -> Result<EndMonoid> {
    let mut elements = homomorphisms_with_budget(act, act, budget)?;
    let id = elements
        .iter()
        .position(|f| f.map().iter().enumerate().all(|(a, &b)| a == b))
        .expect("identity is always an endomorphism");
    let identity = elements.remove(id);
    elements.insert(0, identity);

    let index: HashMap<Vec<usize>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, f)| (f.map().to_vec(), i))
        .collect();
    let k = elements.len();
    let mut table = vec![0; k * k];
    for (i, g) in elements.iter().enumerate() {
        for (j, f) in elements.iter().enumerate() {
            let composite: Vec<usize> = f.map().iter().map(|&b| g.apply(b)).collect();
            table[i * k + j] = index[&composite];
        }
    }
    Ok(EndMonoid {
        act: act.clone(),
        elements,
        monoid: Monoid::from_table_unchecked(k, table),
        index,
    })
}

impl EndMonoid {
    pub fn act(&self) -> &Act {
        &self.act
    }

    pub fn elements(&self) -> &[ActHom] {
        &self.elements
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &ActHom {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &ActHom) -> Option<usize> {
        self.index.get(f.map()).copied()
    }

    pub fn index_of_map(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    pub fn is_commutative(&self) -> bool {
        self.monoid.is_commutative()
    }
}

/// A pair `γ: A -> B`, `π: B -> A` with `π∘γ = id_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    pub embedding: ActHom,
    pub projection: ActHom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractSearch {
    /// First pair in search order (embedding lexicographic, then projection).
    pub first: Retraction,
    /// First pair whose embedding is not bijective, if any.
    pub proper: Option<Retraction>,
}

impl RetractSearch {
    pub fn is_proper(&self) -> bool {
        self.proper.is_some()
    }
}

/// Whether `retract` is a retract of `ambient`.
pub fn is_retract_of(retract: &Act, ambient: &Act) -> Result<Option<RetractSearch>> {
    let embeddings = homomorphisms(retract, ambient)?;
    let projections = homomorphisms(ambient, retract)?;
    let mut first = None;
    let mut proper = None;
    for gamma in embeddings.iter().filter(|g| g.is_injective()) {
        let bijective = gamma.is_surjective();
        if first.is_some() && (bijective || proper.is_some()) {
            continue;
        }
        let Some(pi) = projections.iter().find(|pi| {
            gamma
                .map()
                .iter()
                .enumerate()
                .all(|(a, &b)| pi.apply(b) == a)
        }) else {
            continue;
        };
        let pair = Retraction {
            embedding: gamma.clone(),
            projection: pi.clone(),
        };
        if !bijective && proper.is_none() {
            proper = Some(pair.clone());
        }
        if first.is_none() {
            first = Some(pair);
        }
        if proper.is_some() {
            break;
        }
    }
    Ok(first.map(|first| RetractSearch { first, proper }))
}

/// `(n, g)` with `f^n = g∘f^{n+1} = f^{n+1}∘g`, indices into the [`EndMonoid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiRegularWitness {
    pub exponent: usize,
    pub inverse: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRegularity {
    pub holds: bool,
    /// One entry per element of the [`EndMonoid`].
    pub witnesses: Vec<Option<PiRegularWitness>>,
}

/// Searches `n = 1..=|E|`, then `g` in monoid order, for every element.
pub fn is_strongly_pi_regular(end: &EndMonoid) -> PiRegularity {
    let m = end.monoid();
    let witnesses: Vec<Option<PiRegularWitness>> = m
        .elements()
        .map(|f| {
            (1..=m.size()).find_map(|n| {
                let fn_ = m.power(f, n);
                let fn1 = m.mul(fn_, f);
                m.elements()
                    .find(|&g| m.mul(g, fn1) == fn_ && m.mul(fn1, g) == fn_)
                    .map(|g| PiRegularWitness {
                        exponent: n,
                        inverse: g,
                    })
            })
        })
        .collect();
    PiRegularity {
        holds: witnesses.iter().all(Option::is_some),
        witnesses,
    }
}
