//! Deciders for the Hopfian family of properties and the chain indices behind
//! them.
//!
//! Every endomorphism `f` of a finite act has an eventually periodic power
//! sequence `f, f², …`: there are `i < j` with `f^j = f^i`, and every later
//! power repeats the cycle `f^i, …, f^{j-1}`. The kernel chain `K_{f^n}` only
//! grows and the image chain `I_{f^n}` only shrinks, so both are constant on
//! the cycle. Working with `(i, j)` lets the deciders check "for all `m >= n`"
//! literally, by inspecting finitely many powers.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::act::{Act, ActHom, Subact};
use crate::congruence::{
    enumerate_congruences_capped, image_congruence, kernel_congruence, longest_chain, Congruence,
    Partition, DEFAULT_CONGRUENCE_CAP,
};
use crate::endo::{
    end_monoid_with_budget, homomorphisms_with_budget, is_strongly_pi_regular, EndMonoid,
    DEFAULT_SEARCH_BUDGET,
};
use crate::error::{Error, Result};
use crate::monoid::Monoid;

/// Which of the three equivalent characterizations to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    /// The chain is eventually constant: `X_{f^m} = X_{f^n}` for all `m >= n`.
    Definition,
    /// Some consecutive pair agrees: `X_{f^n} = X_{f^{n+1}}`.
    Consecutive,
    /// Kernel and image interact trivially: `I ∩ K = Δ` for the Hopfian side,
    /// `I ∨ K = A×A` for the co-Hopfian side.
    KernelImage,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [
        Criterion::Definition,
        Criterion::Consecutive,
        Criterion::KernelImage,
    ];

    pub fn number(self) -> u8 {
        match self {
            Criterion::Definition => 1,
            Criterion::Consecutive => 2,
            Criterion::KernelImage => 3,
        }
    }
}

impl TryFrom<u8> for Criterion {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        match value {
            1 => Ok(Criterion::Definition),
            2 => Ok(Criterion::Consecutive),
            3 => Ok(Criterion::KernelImage),
            other => Err(Error::BadShape {
                expected: "criterion 1, 2 or 3".into(),
                found: other.to_string(),
            }),
        }
    }
}

/// Powers of an endomorphism up to the first repetition.
#[derive(Debug, Clone)]
pub struct PowerOrbit {
    /// `powers[k]` is `f^{k+1}`.
    powers: Vec<ActHom>,
    /// Least `i` with `f^j = f^i` for `j = powers.len() + 1`.
    cycle_start: usize,
}

impl PowerOrbit {
    pub fn new(f: &ActHom) -> Result<Self> {
        if !f.is_endomorphism() {
            return Err(Error::SourceTargetMismatch(
                "chains are defined for endomorphisms".into(),
            ));
        }
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut powers = vec![f.clone()];
        seen.insert(f.map().to_vec(), 1);
        loop {
            let next = ActHom::compose(f, powers.last().expect("non-empty"))?;
            if let Some(&i) = seen.get(next.map()) {
                return Ok(PowerOrbit {
                    powers,
                    cycle_start: i,
                });
            }
            seen.insert(next.map().to_vec(), powers.len() + 1);
            powers.push(next);
        }
    }

    /// `j`: the first exponent whose power already appeared.
    pub fn repeat_at(&self) -> usize {
        self.powers.len() + 1
    }

    pub fn cycle_start(&self) -> usize {
        self.cycle_start
    }

    pub fn period(&self) -> usize {
        self.repeat_at() - self.cycle_start
    }

    /// `f^m` for any `m >= 1`.
    pub fn power(&self, m: usize) -> &ActHom {
        assert!(m >= 1);
        let k = if m < self.repeat_at() {
            m
        } else {
            self.cycle_start + (m - self.cycle_start) % self.period()
        };
        &self.powers[k - 1]
    }

    pub fn kernel(&self, m: usize) -> Congruence {
        kernel_congruence(self.power(m))
    }

    pub fn image(&self, m: usize) -> Congruence {
        image_congruence(self.power(m)).expect("powers of endomorphisms are endomorphisms")
    }

    /// Least `n` such that `chain(m)` is the same for every `m >= n`.
    fn eventually_constant(&self, chain: impl Fn(usize) -> Partition) -> usize {
        (1..self.repeat_at())
            .find(|&n| {
                let first = chain(n);
                (n.min(self.cycle_start)..self.repeat_at()).all(|m| chain(m) == first)
            })
            .unwrap_or(self.cycle_start)
    }

    /// Least `n` in the distinct-power range satisfying `test`.
    fn first(&self, test: impl Fn(usize) -> bool) -> Option<usize> {
        (1..=self.repeat_at()).find(|&n| test(n))
    }

    /// Least `n` for the kernel chain under `criterion`.
    pub fn kernel_index(&self, criterion: Criterion) -> Option<usize> {
        match criterion {
            Criterion::Definition => {
                Some(self.eventually_constant(|m| self.kernel(m).into_partition()))
            }
            Criterion::Consecutive => self.first(|n| self.kernel(n) == self.kernel(n + 1)),
            Criterion::KernelImage => self.first(|n| {
                self.image(n)
                    .meet(&self.kernel(n))
                    .expect("same act")
                    .is_diagonal()
            }),
        }
    }

    /// Least `n` for the image chain under `criterion`.
    pub fn image_index(&self, criterion: Criterion) -> Option<usize> {
        match criterion {
            Criterion::Definition => {
                Some(self.eventually_constant(|m| self.image(m).into_partition()))
            }
            Criterion::Consecutive => self.first(|n| self.image(n) == self.image(n + 1)),
            Criterion::KernelImage => self.first(|n| {
                self.image(n)
                    .join(&self.kernel(n))
                    .expect("same act")
                    .is_universal()
            }),
        }
    }
}

/// Where one chain of an endomorphism stops growing (or shrinking).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainIndex {
    /// Least `n >= 1` with `X_{f^n} = X_{f^{n+1}}`.
    pub index: usize,
    pub stable: Congruence,
    /// `X_{f^m} = X_{f^n}` for every `n <= m <= 2|A|`.
    pub tail_verified: bool,
}

fn chain_index(f: &ActHom, pick: impl Fn(&PowerOrbit, usize) -> Congruence) -> Result<ChainIndex> {
    let orbit = PowerOrbit::new(f)?;
    let index = (1..=orbit.repeat_at())
        .find(|&n| pick(&orbit, n) == pick(&orbit, n + 1))
        .expect("chains on a finite act stabilize");
    let stable = pick(&orbit, index);
    let bound = 2 * f.source().size();
    let tail_verified = (index..=bound.max(index)).all(|m| pick(&orbit, m) == stable);
    Ok(ChainIndex {
        index,
        stable,
        tail_verified,
    })
}

/// Stabilization point of `K_f ⊆ K_{f²} ⊆ …`.
pub fn k_chain_index(f: &ActHom) -> Result<ChainIndex> {
    chain_index(f, PowerOrbit::kernel)
}

/// Stabilization point of `I_f ⊇ I_{f²} ⊇ …`.
pub fn i_chain_index(f: &ActHom) -> Result<ChainIndex> {
    chain_index(f, PowerOrbit::image)
}

/// Both chains of one endomorphism, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    /// Position in the endomorphism monoid (identity first).
    pub endomorphism: usize,
    pub map: Vec<usize>,
    pub k_index: usize,
    pub i_index: usize,
    pub stable_kernel: Vec<Vec<usize>>,
    pub stable_image: Vec<Vec<usize>>,
}

pub fn chain_report(position: usize, f: &ActHom) -> Result<ChainReport> {
    let k = k_chain_index(f)?;
    let i = i_chain_index(f)?;
    Ok(ChainReport {
        endomorphism: position,
        map: f.map().to_vec(),
        k_index: k.index,
        i_index: i.index,
        stable_kernel: k.stable.classes(),
        stable_image: i.stable.classes(),
    })
}

/// Outcome of a "strongly" decider: whether every endomorphism satisfies the
/// criterion, and the largest of the per-endomorphism least exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongVerdict {
    pub holds: bool,
    pub index: usize,
}

fn strongly(
    endos: &[ActHom],
    index: impl Fn(&PowerOrbit) -> Option<usize>,
) -> Result<StrongVerdict> {
    let mut verdict = StrongVerdict {
        holds: true,
        index: 0,
    };
    for f in endos {
        match index(&PowerOrbit::new(f)?) {
            Some(n) => verdict.index = verdict.index.max(n),
            None => verdict.holds = false,
        }
    }
    if !verdict.holds {
        verdict.index = 0;
    }
    Ok(verdict)
}

/// Strong Hopficity over a precomputed endomorphism list.
pub fn strongly_hopfian_on(endos: &[ActHom], criterion: Criterion) -> Result<StrongVerdict> {
    strongly(endos, |o| o.kernel_index(criterion))
}

pub fn strongly_co_hopfian_on(endos: &[ActHom], criterion: Criterion) -> Result<StrongVerdict> {
    strongly(endos, |o| o.image_index(criterion))
}

/// Deliberate decider corruption, used to show the theorem harness notices.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fault {
    NegateHopfian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainConditions {
    pub noetherian: bool,
    pub artinian: bool,
    pub lattice_size: usize,
    pub max_chain_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiInjectivity {
    pub holds: bool,
    /// First subact `B` and hom `B -> A` with no extension to `A`.
    pub counterexample: Option<(Subact, ActHom)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiProjectivity {
    pub holds: bool,
    /// First congruence `ρ` and hom `A -> A/ρ` that does not lift.
    pub counterexample: Option<(Congruence, ActHom)>,
}

/// Every property flag of one act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub act_size: usize,
    pub end_size: usize,
    pub hopfian: bool,
    pub co_hopfian: bool,
    pub strongly_hopfian: bool,
    pub strongly_hopfian_index: usize,
    pub strongly_co_hopfian: bool,
    pub strongly_co_hopfian_index: usize,
    pub fitting: bool,
    pub noetherian: bool,
    pub artinian: bool,
    pub simple: bool,
    pub quasi_injective: bool,
    pub quasi_projective: bool,
    pub end_commutative: bool,
    pub end_strongly_pi_regular: bool,
    pub congruence_count: usize,
    pub max_chain_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub properties: PropertyReport,
    pub chains: Vec<ChainReport>,
}

/// Configured entry point for the act-level deciders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decider {
    pub search_budget: u64,
    pub congruence_cap: usize,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for Decider {
    fn default() -> Self {
        Decider {
            search_budget: DEFAULT_SEARCH_BUDGET,
            congruence_cap: DEFAULT_CONGRUENCE_CAP,
            fault: None,
        }
    }
}

impl Decider {
    pub fn end_monoid(&self, act: &Act) -> Result<EndMonoid> {
        end_monoid_with_budget(act, self.search_budget)
    }

    pub fn homomorphisms(&self, source: &Act, target: &Act) -> Result<Vec<ActHom>> {
        homomorphisms_with_budget(source, target, self.search_budget)
    }

    pub fn congruences(&self, act: &Act) -> Result<Vec<Congruence>> {
        enumerate_congruences_capped(act, self.congruence_cap)
    }

    /// Every surjective endomorphism is injective.
    pub fn is_hopfian(&self, act: &Act) -> Result<bool> {
        let end = self.end_monoid(act)?;
        Ok(self.hopfian_on(end.elements()))
    }

    pub fn hopfian_on(&self, endos: &[ActHom]) -> bool {
        let honest = endos
            .iter()
            .filter(|f| f.is_surjective())
            .all(ActHom::is_injective);
        match self.fault {
            Some(Fault::NegateHopfian) => !honest,
            None => honest,
        }
    }

    /// Every injective endomorphism is surjective.
    pub fn is_co_hopfian(&self, act: &Act) -> Result<bool> {
        let end = self.end_monoid(act)?;
        Ok(co_hopfian_on(end.elements()))
    }

    pub fn is_strongly_hopfian(&self, act: &Act, criterion: Criterion) -> Result<StrongVerdict> {
        strongly_hopfian_on(self.end_monoid(act)?.elements(), criterion)
    }

    pub fn is_strongly_co_hopfian(&self, act: &Act, criterion: Criterion) -> Result<StrongVerdict> {
        strongly_co_hopfian_on(self.end_monoid(act)?.elements(), criterion)
    }

    /// Strongly Hopfian and strongly co-Hopfian.
    pub fn is_fitting(&self, act: &Act) -> Result<bool> {
        let end = self.end_monoid(act)?;
        Ok(
            strongly_hopfian_on(end.elements(), Criterion::Definition)?.holds
                && strongly_co_hopfian_on(end.elements(), Criterion::Definition)?.holds,
        )
    }

    /// Chain conditions on the congruence lattice together with its size and
    /// the number of members of a longest chain. A finite lattice satisfies
    /// both chain conditions, so the flags record that the lattice was
    /// enumerated in full.
    pub fn chain_conditions(&self, act: &Act) -> Result<ChainConditions> {
        let all = self.congruences(act)?;
        Ok(chain_conditions_of(&all))
    }

    /// No congruences other than `Δ` and `A×A`, on more than one element.
    pub fn is_simple(&self, act: &Act) -> Result<bool> {
        Ok(act.size() > 1 && self.congruences(act)?.len() == 2)
    }

    /// Every hom from a subact into `A` extends to an endomorphism of `A`.
    ///
    /// Arbitrary monomorphisms `B -> A` factor as an isomorphism onto their
    /// image followed by an inclusion, so subact inclusions cover them all.
    pub fn is_quasi_injective(&self, act: &Act) -> Result<QuasiInjectivity> {
        let end = self.end_monoid(act)?;
        self.quasi_injective_on(act, &end)
    }

    pub fn quasi_injective_on(&self, act: &Act, end: &EndMonoid) -> Result<QuasiInjectivity> {
        for subact in act.subacts() {
            let (part, _) = act.restrict(&subact);
            for f in self.homomorphisms(&part, act)? {
                let extends = end.elements().iter().any(|h| {
                    subact
                        .members()
                        .iter()
                        .enumerate()
                        .all(|(i, &b)| h.apply(b) == f.apply(i))
                });
                if !extends {
                    return Ok(QuasiInjectivity {
                        holds: false,
                        counterexample: Some((subact, f)),
                    });
                }
            }
        }
        Ok(QuasiInjectivity {
            holds: true,
            counterexample: None,
        })
    }

    /// Every hom `A -> A/ρ` lifts through the canonical epimorphism.
    ///
    /// A surjection `g: A -> B` identifies `B` with `A/K_g`, so canonical
    /// epimorphisms cover every surjection.
    pub fn is_quasi_projective(&self, act: &Act) -> Result<QuasiProjectivity> {
        let end = self.end_monoid(act)?;
        self.quasi_projective_on(act, &end)
    }

    pub fn quasi_projective_on(&self, act: &Act, end: &EndMonoid) -> Result<QuasiProjectivity> {
        for rho in self.congruences(act)? {
            let (factor, pi) = act.quotient(&rho);
            for f in self.homomorphisms(act, &factor)? {
                let lifts = end
                    .elements()
                    .iter()
                    .any(|h| (0..act.size()).all(|a| pi.apply(h.apply(a)) == f.apply(a)));
                if !lifts {
                    return Ok(QuasiProjectivity {
                        holds: false,
                        counterexample: Some((rho, f)),
                    });
                }
            }
        }
        Ok(QuasiProjectivity {
            holds: true,
            counterexample: None,
        })
    }

    /// Full report: all property flags plus one chain report per endomorphism.
    pub fn classify(&self, act: &Act) -> Result<Classification> {
        let end = self.end_monoid(act)?;
        let endos = end.elements();
        let chains = endos
            .iter()
            .enumerate()
            .map(|(i, f)| chain_report(i, f))
            .collect::<Result<Vec<_>>>()?;
        let sh = strongly_hopfian_on(endos, Criterion::Definition)?;
        let sch = strongly_co_hopfian_on(endos, Criterion::Definition)?;
        let lattice = self.chain_conditions(act)?;
        let properties = PropertyReport {
            act_size: act.size(),
            end_size: end.len(),
            hopfian: self.hopfian_on(endos),
            co_hopfian: co_hopfian_on(endos),
            strongly_hopfian: sh.holds,
            strongly_hopfian_index: sh.index,
            strongly_co_hopfian: sch.holds,
            strongly_co_hopfian_index: sch.index,
            fitting: sh.holds && sch.holds,
            noetherian: lattice.noetherian,
            artinian: lattice.artinian,
            simple: act.size() > 1 && lattice.lattice_size == 2,
            quasi_injective: self.quasi_injective_on(act, &end)?.holds,
            quasi_projective: self.quasi_projective_on(act, &end)?.holds,
            end_commutative: end.is_commutative(),
            end_strongly_pi_regular: is_strongly_pi_regular(&end).holds,
            congruence_count: lattice.lattice_size,
            max_chain_length: lattice.max_chain_length,
        };
        Ok(Classification { properties, chains })
    }
}

pub fn co_hopfian_on(endos: &[ActHom]) -> bool {
    endos
        .iter()
        .filter(|f| f.is_injective())
        .all(ActHom::is_surjective)
}

pub fn chain_conditions_of(congruences: &[Congruence]) -> ChainConditions {
    ChainConditions {
        noetherian: true,
        artinian: true,
        lattice_size: congruences.len(),
        max_chain_length: longest_chain(congruences),
    }
}

/// Per-element data behind the monoid-level characterizations of the regular
/// act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementIndices {
    pub element: usize,
    /// Least `n` with `r(s^n) = r(s^{n+1})`.
    pub r_index: Option<usize>,
    /// Least `n`, then least `t`, with `s^n = s^{n+1}·t`.
    pub ideal_witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidHopf {
    pub strongly_hopfian: bool,
    pub strongly_co_hopfian: bool,
    pub elements: Vec<ElementIndices>,
}

/// Decides strong (co-)Hopficity of the regular act from the multiplication
/// table alone, without building its endomorphism monoid.
pub fn monoid_hopf_properties(m: &Monoid) -> MonoidHopf {
    let elements: Vec<ElementIndices> = m
        .elements()
        .map(|s| ElementIndices {
            element: s,
            r_index: r_chain_index(m, s),
            ideal_witness: (1..=m.size() + 1).find_map(|n| {
                let sn = m.power(s, n);
                let sn1 = m.mul(sn, s);
                m.elements().find(|&t| m.mul(sn1, t) == sn).map(|t| (n, t))
            }),
        })
        .collect();
    MonoidHopf {
        strongly_hopfian: elements.iter().all(|e| e.r_index.is_some()),
        strongly_co_hopfian: elements.iter().all(|e| e.ideal_witness.is_some()),
        elements,
    }
}

/// Least `n` with `r(s^n) = r(s^{n+1})`, searched up to `|S|`.
pub fn r_chain_index(m: &Monoid, s: usize) -> Option<usize> {
    let mut current = m.right_relation(s);
    let mut power = s;
    for n in 1..=m.size() {
        let next_power = m.mul(power, s);
        let next = m.right_relation(next_power);
        if next == current {
            return Some(n);
        }
        current = next;
        power = next_power;
    }
    None
}
