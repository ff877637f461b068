//! Exhaustive corpora of small monoids and acts, and a registry of theorems
//! about the Hopfian family checked as implications over them.
//!
//! Every theorem is evaluated literally: when an instance satisfies the
//! hypothesis the conclusion is decided and a failure is reported with a
//! serialized witness that can be rebuilt and re-checked from scratch.
//! Instances whose hypothesis fails are counted as vacuous.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::act::{for_each_permutation, Act, ActHom, Subact};
use crate::congruence::{congruence_closure, Congruence, Partition, Relation};
use crate::decide::{
    chain_conditions_of, co_hopfian_on, i_chain_index, k_chain_index, monoid_hopf_properties,
    strongly_co_hopfian_on, strongly_hopfian_on, Criterion, Decider,
};
use crate::endo::{is_retract_of, is_strongly_pi_regular, EndMonoid};
use crate::error::{Error, Result};
use crate::monoid::{validate_monoid, Monoid};

/// Largest monoid [`enumerate_monoids`] handles.
pub const MAX_EXHAUSTIVE_MONOID: usize = 4;
/// Largest act [`enumerate_acts`] handles.
pub const MAX_EXHAUSTIVE_ACT: usize = 5;

const SAMPLE_MONOID_CAP: usize = 8;
const SAMPLE_ACT_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => "noetherian acts are hopfian",
            TheoremId::T2 => "artinian acts are co-hopfian",
            TheoremId::T3 => "strongly hopfian implies hopfian; strongly co-hopfian implies co-hopfian",
            TheoremId::T4 => "the three strongly hopfian criteria agree",
            TheoremId::T5 => "the three strongly co-hopfian criteria agree",
            TheoremId::T6 => "r(s^n) = r(s^(n+1)) and s^n = s^(n+1)t decide the regular act",
            TheoremId::T7 => "proper retracts of strongly hopfian acts are strongly hopfian",
            TheoremId::T8 => {
                "surjective images with induced endomorphisms of strongly co-hopfian acts are strongly co-hopfian"
            }
            TheoremId::T9 => {
                "fully invariant B with B and A/B strongly hopfian makes A strongly hopfian"
            }
            TheoremId::T10 => "strongly pi-regular End(A) makes A strongly hopfian and strongly co-hopfian",
            TheoremId::T11 => {
                "quasi-injective strongly hopfian acts with commutative End are strongly co-hopfian"
            }
            TheoremId::T12 => {
                "quasi-projective strongly co-hopfian acts with commutative End are strongly hopfian"
            }
            TheoremId::T13 => "all factor acts co-hopfian iff all factor acts strongly co-hopfian",
            TheoremId::T14 => "all factor acts hopfian and co-hopfian iff all factor acts fitting",
        }
    }

    fn scope(self) -> Scope {
        match self {
            TheoremId::T6 => Scope::Monoid,
            TheoremId::T7 => Scope::Retract,
            TheoremId::T8 => Scope::Surjection,
            TheoremId::T9 => Scope::Subact,
            _ => Scope::Act,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scope {
    Monoid,
    Act,
    Retract,
    Surjection,
    Subact,
}

/// Which structures to generate and which theorems to check on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub max_monoid_size: usize,
    pub max_act_size: usize,
    pub theorems: Vec<TheoremId>,
    pub seed: Option<u64>,
    /// Random instances added beyond the exhaustive range (needs `seed`).
    pub samples: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_monoid_size: 3,
            max_act_size: 4,
            theorems: TheoremId::ALL.to_vec(),
            seed: None,
            samples: 0,
        }
    }
}

/// All monoids of exactly `n` elements up to isomorphism, as canonical
/// tables (the least table over relabelings that keep the identity at 0).
pub fn enumerate_monoids(n: usize) -> Result<Vec<Monoid>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_EXHAUSTIVE_MONOID {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_EXHAUSTIVE_MONOID,
        });
    }
    let mut table = vec![usize::MAX; n * n];
    for s in 0..n {
        table[s] = s;
        table[s * n] = s;
    }
    let free: Vec<usize> = (1..n)
        .flat_map(|s| (1..n).map(move |t| s * n + t))
        .collect();
    let mut found = BTreeSet::new();
    fill_monoid(n, &mut table, &free, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|t| Monoid::from_table_unchecked(n, t))
        .collect())
}

fn fill_monoid(
    n: usize,
    table: &mut [usize],
    free: &[usize],
    depth: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    if depth == free.len() {
        let candidate = Monoid::from_table_unchecked(n, table.to_vec());
        found.insert(canonical_monoid_table(&candidate));
        return;
    }
    for value in 0..n {
        table[free[depth]] = value;
        if partial_associative(n, table) {
            fill_monoid(n, table, free, depth + 1, found);
        }
    }
    table[free[depth]] = usize::MAX;
}

fn partial_associative(n: usize, table: &[usize]) -> bool {
    let get = |s: usize, t: usize| table[s * n + t];
    for s in 0..n {
        for t in 0..n {
            let st = get(s, t);
            if st == usize::MAX {
                continue;
            }
            for u in 0..n {
                let tu = get(t, u);
                if tu == usize::MAX {
                    continue;
                }
                let (left, right) = (get(st, u), get(s, tu));
                if left != usize::MAX && right != usize::MAX && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Least relabeled table over permutations fixing the identity.
pub fn canonical_monoid_table(m: &Monoid) -> Vec<usize> {
    let n = m.size();
    let mut best = m.table().to_vec();
    for_each_permutation(n - 1, |p| {
        let perm: Vec<usize> = std::iter::once(0).chain(p.iter().map(|&i| i + 1)).collect();
        let t = m.relabeled_table(&perm);
        if t < best {
            best = t;
        }
        false
    });
    best
}

/// Least relabeled action table over all carrier permutations.
pub fn canonical_act_table(act: &Act) -> Vec<usize> {
    let mut best = act.table().to_vec();
    for_each_permutation(act.size(), |perm| {
        let t = act.relabeled_table(perm);
        if t < best {
            best = t;
        }
        false
    });
    best
}

/// All acts with exactly `size` elements over `monoid`, up to isomorphism,
/// in canonical form and sorted.
pub fn enumerate_acts(monoid: &Arc<Monoid>, size: usize) -> Result<Vec<Act>> {
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    if size > MAX_EXHAUSTIVE_ACT {
        return Err(Error::SizeTooLarge {
            size,
            max: MAX_EXHAUSTIVE_ACT,
        });
    }
    if monoid.size() > MAX_EXHAUSTIVE_MONOID {
        return Err(Error::SizeTooLarge {
            size: monoid.size(),
            max: MAX_EXHAUSTIVE_MONOID,
        });
    }
    let n = monoid.size();
    // columns[s][a] = a·s
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    columns[0] = (0..size).collect();
    let mut found = BTreeSet::new();
    fill_act(monoid, size, &mut columns, 1, &mut found);
    Ok(found
        .into_iter()
        .map(|t| Act::from_table_unchecked(monoid.clone(), size, t))
        .collect())
}

fn fill_act(
    monoid: &Arc<Monoid>,
    size: usize,
    columns: &mut Vec<Vec<usize>>,
    s: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    let n = monoid.size();
    if s == n {
        let table: Vec<usize> = (0..size)
            .flat_map(|a| columns.iter().map(move |c| c[a]))
            .collect();
        let act = Act::from_table_unchecked(monoid.clone(), size, table);
        found.insert(canonical_act_table(&act));
        return;
    }
    // a column forced by an earlier product: a·(uv) = (a·u)·v
    let forced = (1..s)
        .flat_map(|u| (1..s).map(move |v| (u, v)))
        .find(|&(u, v)| monoid.mul(u, v) == s);
    if let Some((u, v)) = forced {
        columns[s] = columns[u].iter().map(|&x| columns[v][x]).collect();
        if columns_consistent(monoid, columns, s) {
            fill_act(monoid, size, columns, s + 1, found);
        }
        return;
    }
    let mut column = vec![0; size];
    loop {
        columns[s] = column.clone();
        if columns_consistent(monoid, columns, s) {
            fill_act(monoid, size, columns, s + 1, found);
        }
        // next function in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            column[i] += 1;
            if column[i] < size {
                break;
            }
            column[i] = 0;
        }
    }
}

/// Checks `a·(uv) = (a·u)·v` for every pair whose three columns are filled.
fn columns_consistent(monoid: &Monoid, columns: &[Vec<usize>], filled: usize) -> bool {
    for u in 0..=filled {
        for v in 0..=filled {
            let uv = monoid.mul(u, v);
            if uv > filled {
                continue;
            }
            if columns[u]
                .iter()
                .enumerate()
                .any(|(a, &au)| columns[uv][a] != columns[v][au])
            {
                return false;
            }
        }
    }
    true
}

/// The generated structures a suite runs over.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub monoids: Vec<Arc<Monoid>>,
    pub acts: Vec<Act>,
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    if spec.max_monoid_size == 0 || spec.max_act_size == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mut monoids = Vec::new();
    for n in 1..=spec.max_monoid_size {
        monoids.extend(enumerate_monoids(n)?.into_iter().map(Arc::new));
    }
    let per_monoid: Vec<Vec<Act>> = monoids
        .par_iter()
        .map(|m| {
            let mut acts = Vec::new();
            for size in 1..=spec.max_act_size {
                acts.extend(enumerate_acts(m, size)?);
            }
            Ok(acts)
        })
        .collect::<Result<_>>()?;
    let mut acts: Vec<Act> = per_monoid.into_iter().flatten().collect();

    if let (Some(seed), true) = (spec.seed, spec.samples > 0) {
        let (extra_monoids, extra_acts) = sample_instances(seed, spec.samples)?;
        monoids.extend(extra_monoids);
        acts.extend(extra_acts);
    }
    Ok(Corpus { monoids, acts })
}

/// Seeded random monoids and acts past the exhaustive range.
///
/// Monoids are generated as transformation monoids (products read left to
/// right, so points form a right act) and acts as factor acts of one or two
/// copies of the regular act. Candidates that fail validation or exceed the
/// size caps are rejected and redrawn.
pub fn sample_instances(seed: u64, count: usize) -> Result<(Vec<Arc<Monoid>>, Vec<Act>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut monoids = Vec::with_capacity(count);
    let mut acts = Vec::with_capacity(count);
    while acts.len() < count {
        let points = rng.gen_range(2..=3);
        let generators = rng.gen_range(1..=2);
        let gens: Vec<Vec<usize>> = (0..generators)
            .map(|_| (0..points).map(|_| rng.gen_range(0..points)).collect())
            .collect();
        let Some(rows) = transformation_monoid(points, &gens, SAMPLE_MONOID_CAP) else {
            continue;
        };
        let Ok((monoid, _)) = validate_monoid(rows.len(), &rows) else {
            continue;
        };
        let monoid = Arc::new(monoid);

        let copies = rng.gen_range(1..=2);
        let n = monoid.size();
        let free_table: Vec<usize> = (0..copies * n)
            .flat_map(|a| {
                let (copy, x) = (a / n, a % n);
                let monoid = monoid.clone();
                (0..n).map(move |s| copy * n + monoid.mul(x, s))
            })
            .collect();
        let free = Act::from_table_unchecked(monoid.clone(), copies * n, free_table);
        let pairs = rng.gen_range(0..=3);
        let relation = Relation::from_pairs(
            free.size(),
            (0..pairs).map(|_| (rng.gen_range(0..free.size()), rng.gen_range(0..free.size()))),
        );
        let rho = congruence_closure(&free, &relation)?;
        let (factor, _) = free.quotient(&rho);
        if factor.size() > SAMPLE_ACT_CAP {
            continue;
        }
        let Ok(act) = Act::new(monoid.clone(), &factor.rows()) else {
            continue;
        };
        monoids.push(monoid);
        acts.push(act);
    }
    Ok((monoids, acts))
}

/// Multiplication table of the transformation monoid generated by `gens`,
/// identity first, or `None` past `cap` elements.
fn transformation_monoid(
    points: usize,
    gens: &[Vec<usize>],
    cap: usize,
) -> Option<Vec<Vec<usize>>> {
    let identity: Vec<usize> = (0..points).collect();
    let mut elements = vec![identity.clone()];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let next: Vec<usize> = elements[i].iter().map(|&p| g[p]).collect();
            if !index.contains_key(&next) {
                if elements.len() == cap {
                    return None;
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    Some(
        elements
            .iter()
            .map(|s| {
                elements
                    .iter()
                    .map(|t| index[&s.iter().map(|&p| t[p]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect(),
    )
}

/// One object a theorem is evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Monoid(Arc<Monoid>),
    Act(Act),
    /// Candidate proper retract `retract` of `ambient`.
    Retract {
        retract: Act,
        ambient: Act,
    },
    /// The canonical epimorphism `source -> source/congruence`.
    Surjection {
        source: Act,
        congruence: Congruence,
    },
    Subact {
        act: Act,
        subact: Subact,
    },
}

/// Serializable mirror of [`Instance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceData {
    Monoid {
        monoid: Vec<Vec<usize>>,
    },
    Act {
        monoid: Vec<Vec<usize>>,
        act: Vec<Vec<usize>>,
    },
    Retract {
        monoid: Vec<Vec<usize>>,
        retract: Vec<Vec<usize>>,
        ambient: Vec<Vec<usize>>,
    },
    Surjection {
        monoid: Vec<Vec<usize>>,
        source: Vec<Vec<usize>>,
        congruence: Vec<Vec<usize>>,
    },
    Subact {
        monoid: Vec<Vec<usize>>,
        act: Vec<Vec<usize>>,
        subact: Vec<usize>,
    },
}

impl Instance {
    pub fn to_data(&self) -> InstanceData {
        match self {
            Instance::Monoid(m) => InstanceData::Monoid { monoid: m.rows() },
            Instance::Act(a) => InstanceData::Act {
                monoid: a.monoid().rows(),
                act: a.rows(),
            },
            Instance::Retract { retract, ambient } => InstanceData::Retract {
                monoid: ambient.monoid().rows(),
                retract: retract.rows(),
                ambient: ambient.rows(),
            },
            Instance::Surjection { source, congruence } => InstanceData::Surjection {
                monoid: source.monoid().rows(),
                source: source.rows(),
                congruence: congruence.classes(),
            },
            Instance::Subact { act, subact } => InstanceData::Subact {
                monoid: act.monoid().rows(),
                act: act.rows(),
                subact: subact.members().to_vec(),
            },
        }
    }
}

impl InstanceData {
    /// Rebuilds and revalidates every table from scratch.
    pub fn rebuild(&self) -> Result<Instance> {
        let invalid = |e: Error| Error::InvalidWitness(e.to_string());
        let monoid =
            |rows: &Vec<Vec<usize>>| Monoid::from_rows(rows).map(Arc::new).map_err(invalid);
        Ok(match self {
            InstanceData::Monoid { monoid: m } => Instance::Monoid(monoid(m)?),
            InstanceData::Act { monoid: m, act } => {
                Instance::Act(Act::new(monoid(m)?, act).map_err(invalid)?)
            }
            InstanceData::Retract {
                monoid: m,
                retract,
                ambient,
            } => {
                let m = monoid(m)?;
                Instance::Retract {
                    retract: Act::new(m.clone(), retract).map_err(invalid)?,
                    ambient: Act::new(m, ambient).map_err(invalid)?,
                }
            }
            InstanceData::Surjection {
                monoid: m,
                source,
                congruence,
            } => {
                let source = Act::new(monoid(m)?, source).map_err(invalid)?;
                let partition =
                    Partition::from_classes(source.size(), congruence).map_err(invalid)?;
                let congruence = Congruence::new(&source, partition).map_err(invalid)?;
                Instance::Surjection { source, congruence }
            }
            InstanceData::Subact {
                monoid: m,
                act,
                subact,
            } => {
                let act = Act::new(monoid(m)?, act).map_err(invalid)?;
                let subact = Subact::new(&act, subact.clone()).map_err(invalid)?;
                Instance::Subact { act, subact }
            }
        })
    }
}

/// A failing instance together with what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: InstanceData,
    pub detail: String,
}

/// Result of checking one theorem over one or more instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub statement: String,
    pub instances_checked: u64,
    pub non_vacuous: u64,
    pub vacuous: u64,
    pub passed: bool,
    /// First violation in corpus order.
    pub counterexample: Option<Witness>,
    /// Auxiliary tallies (for example how often two criteria picked different
    /// least exponents).
    pub counters: BTreeMap<String, u64>,
    /// Per-instance notes; only kept for single-instance checks.
    pub log: Vec<String>,
}

impl Verdict {
    fn empty(theorem: TheoremId) -> Self {
        Verdict {
            theorem,
            statement: theorem.statement().to_string(),
            instances_checked: 0,
            non_vacuous: 0,
            vacuous: 0,
            passed: true,
            counterexample: None,
            counters: BTreeMap::new(),
            log: Vec::new(),
        }
    }

    fn absorb(&mut self, other: Verdict) {
        self.instances_checked += other.instances_checked;
        self.non_vacuous += other.non_vacuous;
        self.vacuous += other.vacuous;
        if !other.passed {
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = other.counterexample;
            }
        }
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
    }
}

enum Status {
    Vacuous,
    Holds,
    Violated(String),
}

struct Evaluation {
    status: Status,
    log: Vec<String>,
    counters: BTreeMap<String, u64>,
}

impl Evaluation {
    fn new(status: Status) -> Self {
        Evaluation {
            status,
            log: Vec::new(),
            counters: BTreeMap::new(),
        }
    }

    fn implication(hypothesis: bool, conclusion: bool, detail: impl FnOnce() -> String) -> Self {
        Evaluation::new(match (hypothesis, conclusion) {
            (false, _) => Status::Vacuous,
            (true, true) => Status::Holds,
            (true, false) => Status::Violated(detail()),
        })
    }

    fn agreement(ok: bool, detail: impl FnOnce() -> String) -> Self {
        Evaluation::new(if ok {
            Status::Holds
        } else {
            Status::Violated(detail())
        })
    }

    fn note(mut self, line: String) -> Self {
        self.log.push(line);
        self
    }

    fn count(mut self, key: &str, hit: bool) -> Self {
        if hit {
            *self.counters.entry(key.to_string()).or_default() += 1;
        }
        self
    }
}

fn scope_matches(theorem: TheoremId, instance: &Instance) -> bool {
    matches!(
        (theorem.scope(), instance),
        (Scope::Monoid, Instance::Monoid(_))
            | (Scope::Act, Instance::Act(_))
            | (Scope::Retract, Instance::Retract { .. })
            | (Scope::Surjection, Instance::Surjection { .. })
            | (Scope::Subact, Instance::Subact { .. })
    )
}

/// Evaluates one theorem on one instance.
pub fn check_theorem(
    theorem: TheoremId,
    instance: &Instance,
    decider: &Decider,
) -> Result<Verdict> {
    if !scope_matches(theorem, instance) {
        return Err(Error::SourceTargetMismatch(format!(
            "{theorem} is not stated for this kind of instance"
        )));
    }
    let evaluation = evaluate(theorem, instance, decider)?;
    let mut verdict = Verdict::empty(theorem);
    verdict.instances_checked = 1;
    match evaluation.status {
        Status::Vacuous => verdict.vacuous = 1,
        Status::Holds => verdict.non_vacuous = 1,
        Status::Violated(detail) => {
            verdict.non_vacuous = 1;
            verdict.passed = false;
            verdict.counterexample = Some(Witness {
                instance: instance.to_data(),
                detail,
            });
        }
    }
    verdict.counters = evaluation.counters;
    verdict.log = evaluation.log;
    Ok(verdict)
}

/// Rebuilds the witness from its serialized tables and evaluates the theorem
/// again; `true` when the violation reproduces.
pub fn recheck_witness(theorem: TheoremId, witness: &Witness, decider: &Decider) -> Result<bool> {
    let instance = witness.instance.rebuild()?;
    Ok(!check_theorem(theorem, &instance, decider)?.passed)
}

struct ActFacts {
    end: EndMonoid,
    strongly_hopfian: bool,
    strongly_co_hopfian: bool,
}

impl ActFacts {
    fn new(act: &Act, decider: &Decider) -> Result<Self> {
        let end = decider.end_monoid(act)?;
        let strongly_hopfian = strongly_hopfian_on(end.elements(), Criterion::Definition)?.holds;
        let strongly_co_hopfian =
            strongly_co_hopfian_on(end.elements(), Criterion::Definition)?.holds;
        Ok(ActFacts {
            end,
            strongly_hopfian,
            strongly_co_hopfian,
        })
    }
}

fn evaluate(theorem: TheoremId, instance: &Instance, decider: &Decider) -> Result<Evaluation> {
    match instance {
        Instance::Monoid(m) => evaluate_monoid(m, decider),
        Instance::Act(act) => evaluate_act(theorem, act, decider),
        Instance::Retract { retract, ambient } => {
            let Some(search) = is_retract_of(retract, ambient)? else {
                return Ok(Evaluation::new(Status::Vacuous));
            };
            let ambient_sh = ActFacts::new(ambient, decider)?.strongly_hopfian;
            let retract_sh = ActFacts::new(retract, decider)?.strongly_hopfian;
            Ok(Evaluation::implication(
                search.is_proper() && ambient_sh,
                retract_sh,
                || "proper retract of a strongly hopfian act is not strongly hopfian".into(),
            ))
        }
        Instance::Surjection { source, congruence } => {
            let (target, h) = source.quotient(congruence);
            let facts = ActFacts::new(source, decider)?;
            let target_facts = ActFacts::new(&target, decider)?;
            let induced = target_facts
                .end
                .elements()
                .iter()
                .all(|f| is_induced(f, &h, facts.end.elements()));
            let has_section = decider
                .homomorphisms(&target, source)?
                .iter()
                .any(|s| (0..target.size()).all(|b| h.apply(s.apply(b)) == b));
            Ok(Evaluation::implication(
                facts.strongly_co_hopfian && induced,
                target_facts.strongly_co_hopfian,
                || {
                    "image under a surjection with induced endomorphisms is not strongly co-hopfian"
                        .into()
                },
            )
            .count("surjections_with_section", has_section)
            .count("surjections_inducing_all_endomorphisms", induced)
            .note(format!("induced={induced} section={has_section}")))
        }
        Instance::Subact { act, subact } => {
            let invariant = act.is_fully_invariant(subact)?;
            let (part, _) = act.restrict(subact);
            let (rees, _) = act.rees_quotient(subact);
            let part_sh = ActFacts::new(&part, decider)?.strongly_hopfian;
            let rees_sh = ActFacts::new(&rees, decider)?.strongly_hopfian;
            let act_sh = ActFacts::new(act, decider)?.strongly_hopfian;
            Ok(Evaluation::implication(
                invariant && part_sh && rees_sh,
                act_sh,
                || {
                    "fully invariant subact and Rees factor strongly hopfian but the act is not"
                        .into()
                },
            ))
        }
    }
}

/// `f` is induced by some `g` when `f∘h = h∘g`.
fn is_induced(f: &ActHom, h: &ActHom, source_endos: &[ActHom]) -> bool {
    source_endos
        .iter()
        .any(|g| (0..h.source().size()).all(|a| f.apply(h.apply(a)) == h.apply(g.apply(a))))
}

fn evaluate_monoid(m: &Arc<Monoid>, decider: &Decider) -> Result<Evaluation> {
    let direct = monoid_hopf_properties(m);
    let regular = Act::regular(m.clone());
    let facts = ActFacts::new(&regular, decider)?;
    let mut mismatches = Vec::new();
    if direct.strongly_hopfian != facts.strongly_hopfian {
        mismatches.push("strongly hopfian flag".to_string());
    }
    if direct.strongly_co_hopfian != facts.strongly_co_hopfian {
        mismatches.push("strongly co-hopfian flag".to_string());
    }
    for e in &direct.elements {
        let lambda = ActHom::left_translation(&regular, e.element);
        if e.r_index != Some(k_chain_index(&lambda)?.index) {
            mismatches.push(format!("r-index of element {}", e.element));
        }
        if e.ideal_witness.map(|(n, _)| n) != Some(i_chain_index(&lambda)?.index) {
            mismatches.push(format!("ideal index of element {}", e.element));
        }
    }
    Ok(Evaluation::agreement(mismatches.is_empty(), || {
        format!(
            "monoid-level and act-level results differ: {}",
            mismatches.join(", ")
        )
    }))
}

fn evaluate_act(theorem: TheoremId, act: &Act, decider: &Decider) -> Result<Evaluation> {
    let facts = ActFacts::new(act, decider)?;
    let endos = facts.end.elements();
    Ok(match theorem {
        TheoremId::T1 => {
            let noetherian = chain_conditions_of(&decider.congruences(act)?).noetherian;
            Evaluation::implication(noetherian, decider.hopfian_on(endos), || {
                "noetherian act with a surjective, non-injective endomorphism".into()
            })
        }
        TheoremId::T2 => {
            let artinian = chain_conditions_of(&decider.congruences(act)?).artinian;
            Evaluation::implication(artinian, co_hopfian_on(endos), || {
                "artinian act with an injective, non-surjective endomorphism".into()
            })
        }
        TheoremId::T3 => {
            let hopfian = decider.hopfian_on(endos);
            let co_hopfian = co_hopfian_on(endos);
            let hypothesis = facts.strongly_hopfian || facts.strongly_co_hopfian;
            let conclusion =
                (!facts.strongly_hopfian || hopfian) && (!facts.strongly_co_hopfian || co_hopfian);
            Evaluation::implication(hypothesis, conclusion, || {
                format!(
                    "strongly_hopfian={} hopfian={hopfian} strongly_co_hopfian={} co_hopfian={co_hopfian}",
                    facts.strongly_hopfian, facts.strongly_co_hopfian
                )
            })
        }
        TheoremId::T4 => criteria_agreement(endos, "strongly hopfian", strongly_hopfian_on)?,
        TheoremId::T5 => criteria_agreement(endos, "strongly co-hopfian", strongly_co_hopfian_on)?,
        TheoremId::T10 => {
            let regular = is_strongly_pi_regular(&facts.end).holds;
            Evaluation::implication(
                regular,
                facts.strongly_hopfian && facts.strongly_co_hopfian,
                || "strongly pi-regular End(A) but A is not fitting".into(),
            )
        }
        TheoremId::T11 => {
            let qi = decider.quasi_injective_on(act, &facts.end)?.holds;
            let hypothesis = qi && facts.strongly_hopfian && facts.end.is_commutative();
            let pi_regular = is_strongly_pi_regular(&facts.end).holds;
            Evaluation::implication(hypothesis, facts.strongly_co_hopfian && pi_regular, || {
                format!(
                    "strongly_co_hopfian={} end_strongly_pi_regular={pi_regular}",
                    facts.strongly_co_hopfian
                )
            })
        }
        TheoremId::T12 => {
            let qp = decider.quasi_projective_on(act, &facts.end)?.holds;
            let hypothesis = qp && facts.strongly_co_hopfian && facts.end.is_commutative();
            let pi_regular = is_strongly_pi_regular(&facts.end).holds;
            Evaluation::implication(hypothesis, facts.strongly_hopfian && pi_regular, || {
                format!(
                    "strongly_hopfian={} end_strongly_pi_regular={pi_regular}",
                    facts.strongly_hopfian
                )
            })
        }
        TheoremId::T13 | TheoremId::T14 => {
            let mut weak = true;
            let mut strong = true;
            for rho in decider.congruences(act)? {
                let (factor, _) = act.quotient(&rho);
                let f = ActFacts::new(&factor, decider)?;
                let factor_endos = f.end.elements();
                if theorem == TheoremId::T13 {
                    weak &= co_hopfian_on(factor_endos);
                    strong &= f.strongly_co_hopfian;
                } else {
                    weak &= decider.hopfian_on(factor_endos) && co_hopfian_on(factor_endos);
                    strong &= f.strongly_hopfian && f.strongly_co_hopfian;
                }
            }
            Evaluation::agreement(weak == strong, || {
                format!("every factor act: weak property {weak}, strong property {strong}")
            })
        }
        TheoremId::T6 | TheoremId::T7 | TheoremId::T8 | TheoremId::T9 => {
            unreachable!("scope checked by the caller")
        }
    })
}

type StrongDecider = fn(&[ActHom], Criterion) -> Result<crate::decide::StrongVerdict>;

fn criteria_agreement(endos: &[ActHom], name: &str, decide: StrongDecider) -> Result<Evaluation> {
    let [c1, c2, c3] = Criterion::ALL.map(|c| decide(endos, c));
    let (c1, c2, c3) = (c1?, c2?, c3?);
    let agree = c1.holds == c2.holds && c2.holds == c3.holds && c1.index == c2.index;
    Ok(Evaluation::agreement(agree, || {
        format!(
            "{name} criteria disagree: definition={:?} consecutive={:?} kernel_image={:?}",
            c1, c2, c3
        )
    })
    .count("kernel_image_index_differs", c3.index != c2.index)
    .note(format!(
        "indices: definition={} consecutive={} kernel_image={}",
        c1.index, c2.index, c3.index
    )))
}

/// Every instance a theorem quantifies over within the corpus, in corpus
/// order.
pub fn instances_for(
    theorem: TheoremId,
    corpus: &Corpus,
    decider: &Decider,
) -> Result<Vec<Instance>> {
    Ok(match theorem.scope() {
        Scope::Monoid => corpus
            .monoids
            .iter()
            .cloned()
            .map(Instance::Monoid)
            .collect(),
        Scope::Act => corpus.acts.iter().cloned().map(Instance::Act).collect(),
        Scope::Retract => {
            let per_act: Vec<Vec<Instance>> = corpus
                .acts
                .par_iter()
                .map(|ambient| retract_candidates(ambient, decider))
                .collect::<Result<_>>()?;
            per_act.into_iter().flatten().collect()
        }
        Scope::Surjection => {
            let per_act: Vec<Vec<Instance>> = corpus
                .acts
                .par_iter()
                .map(|source| {
                    Ok(decider
                        .congruences(source)?
                        .into_iter()
                        .map(|congruence| Instance::Surjection {
                            source: source.clone(),
                            congruence,
                        })
                        .collect())
                })
                .collect::<Result<_>>()?;
            per_act.into_iter().flatten().collect()
        }
        Scope::Subact => corpus
            .acts
            .iter()
            .flat_map(|act| {
                act.subacts().into_iter().map(|subact| Instance::Subact {
                    act: act.clone(),
                    subact,
                })
            })
            .collect(),
    })
}

/// Images of non-surjective idempotent endomorphisms: up to isomorphism these
/// are exactly the proper retracts.
fn retract_candidates(ambient: &Act, decider: &Decider) -> Result<Vec<Instance>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in decider.end_monoid(ambient)?.elements() {
        let idempotent = e.map().iter().all(|&b| e.apply(b) == b);
        if !idempotent || e.is_surjective() {
            continue;
        }
        let image = e.image_subact();
        if seen.insert(image.members().to_vec()) {
            let (retract, _) = ambient.restrict(&image);
            out.push(Instance::Retract {
                retract,
                ambient: ambient.clone(),
            });
        }
    }
    Ok(out)
}

/// Checks every requested theorem over the corpus. Verdicts come back sorted
/// by theorem id; each counterexample is the first violation in corpus order.
pub fn run_suite(spec: &CorpusSpec, decider: &Decider) -> Result<Vec<Verdict>> {
    let corpus = build_corpus(spec)?;
    run_on_corpus(&corpus, &spec.theorems, decider)
}

pub fn run_on_corpus(
    corpus: &Corpus,
    theorems: &[TheoremId],
    decider: &Decider,
) -> Result<Vec<Verdict>> {
    let ids: BTreeSet<TheoremId> = theorems.iter().copied().collect();
    ids.into_iter()
        .map(|theorem| {
            let instances = instances_for(theorem, corpus, decider)?;
            let verdicts: Vec<Verdict> = instances
                .par_iter()
                .map(|i| check_theorem(theorem, i, decider))
                .collect::<Result<_>>()?;
            let mut total = Verdict::empty(theorem);
            for v in verdicts {
                total.absorb(v);
            }
            Ok(total)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2() -> Arc<Monoid> {
        Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap())
    }

    fn a2() -> Act {
        Act::new(m2(), &[vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn theorem_ids_parse() {
        assert_eq!("t11".parse::<TheoremId>().unwrap(), TheoremId::T11);
        assert_eq!(TheoremId::T4.to_string(), "T4");
        assert!(matches!(
            "T15".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn small_monoid_counts() {
        assert_eq!(enumerate_monoids(1).unwrap().len(), 1);
        assert_eq!(enumerate_monoids(2).unwrap().len(), 2);
        assert!(matches!(
            enumerate_monoids(5),
            Err(Error::SizeTooLarge { .. })
        ));
    }

    #[test]
    fn small_act_counts() {
        let trivial = Arc::new(Monoid::trivial());
        assert_eq!(enumerate_acts(&trivial, 1).unwrap().len(), 1);
        assert_eq!(enumerate_acts(&trivial, 3).unwrap().len(), 1);
        let acts = enumerate_acts(&m2(), 2).unwrap();
        assert!(acts.iter().any(|a| a.isomorphism_to(&a2()).is_some()));
        assert!(matches!(
            enumerate_acts(&m2(), 6),
            Err(Error::SizeTooLarge { .. })
        ));
    }

    #[test]
    fn t9_on_a2() {
        let a = a2();
        let instance = Instance::Subact {
            act: a.clone(),
            subact: Subact::new(&a, vec![1]).unwrap(),
        };
        let v = check_theorem(TheoremId::T9, &instance, &Decider::default()).unwrap();
        assert!(v.passed);
        assert_eq!(v.non_vacuous, 1);
    }

    #[test]
    fn scope_mismatch_is_an_error() {
        let err = check_theorem(TheoremId::T9, &Instance::Act(a2()), &Decider::default());
        assert!(err.is_err());
    }

    #[test]
    fn witness_round_trip() {
        let a = a2();
        let instance = Instance::Surjection {
            source: a.clone(),
            congruence: Congruence::universal(&a),
        };
        assert_eq!(instance.to_data().rebuild().unwrap(), instance);
    }

    #[test]
    fn transformation_monoids_are_monoids() {
        let rows = transformation_monoid(3, &[vec![1, 2, 0]], 8).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(validate_monoid(3, &rows).is_ok());
        assert!(transformation_monoid(3, &[vec![1, 0, 2], vec![1, 2, 0]], 4).is_none());
    }
}
