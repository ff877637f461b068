//! Brute-force oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use hopfian::harness::{build_corpus, Corpus, CorpusSpec};
use hopfian::monoid::zmod_mult_monoid;
use hopfian::{Act, Monoid, Partition};

/// Monoids of size ≤ 3 and every act of size ≤ 4 over each.
pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| build_corpus(&CorpusSpec::default()).unwrap())
}

pub fn m2() -> Arc<Monoid> {
    Arc::new(Monoid::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap())
}

pub fn a2() -> Act {
    Act::new(m2(), &[vec![0, 1], vec![1, 1]]).unwrap()
}

pub fn z4() -> Act {
    Act::regular(Arc::new(zmod_mult_monoid(4)))
}

/// Every map `[n] -> [m]` in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = vec![0; n];
    loop {
        out.push(map.clone());
        let mut i = n;
        loop {
            if i == 0 || m == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Maps commuting with every monoid element, found by checking all of them.
pub fn brute_homs(source: &Act, target: &Act) -> Vec<Vec<usize>> {
    all_maps(source.size(), target.size())
        .into_iter()
        .filter(|f| {
            (0..source.size()).all(|a| {
                source
                    .monoid()
                    .elements()
                    .all(|s| f[source.act(a, s)] == target.act(f[a], s))
            })
        })
        .collect()
}

/// Every set partition of `[n]` as restricted-growth labels.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for label in 0..=next {
            prefix.push(label);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Partitions whose classes are preserved by the action.
pub fn brute_congruences(act: &Act) -> BTreeSet<Vec<usize>> {
    all_partitions(act.size())
        .into_iter()
        .filter(|labels| {
            (0..act.size()).all(|a| {
                (0..act.size()).all(|b| {
                    labels[a] != labels[b]
                        || act
                            .monoid()
                            .elements()
                            .all(|s| labels[act.act(a, s)] == labels[act.act(b, s)])
                })
            })
        })
        .collect()
}

/// Pairs joined by a finite chain of steps in either partition.
pub fn chain_join(n: usize, rho: &Partition, sigma: &Partition) -> HashSet<(usize, usize)> {
    let mut out = HashSet::new();
    for a in 0..n {
        let mut seen = vec![false; n];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            out.insert((a, x));
            for (y, seen_y) in seen.iter_mut().enumerate() {
                if !*seen_y && (rho.related(x, y) || sigma.related(x, y)) {
                    *seen_y = true;
                    stack.push(y);
                }
            }
        }
    }
    out
}

/// Bijection `p` with `p(a·s) = p(a)·s`, searched over all permutations.
pub fn brute_isomorphic(a: &Act, b: &Act) -> bool {
    if a.size() != b.size() {
        return false;
    }
    all_maps(a.size(), b.size()).into_iter().any(|p| {
        p.iter().collect::<HashSet<_>>().len() == a.size()
            && (0..a.size()).all(|x| {
                a.monoid()
                    .elements()
                    .all(|s| p[a.act(x, s)] == b.act(p[x], s))
            })
    })
}

/// Canonical form of a monoid table over all relabelings of its elements.
pub fn brute_monoid_class(rows: &[Vec<usize>]) -> Vec<usize> {
    let n = rows.len();
    all_maps(n, n)
        .into_iter()
        .filter(|p| p.iter().collect::<HashSet<_>>().len() == n)
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                inv[x] = i;
            }
            (0..n)
                .flat_map(|s| (0..n).map(move |t| (s, t)))
                .map(|(s, t)| p[rows[inv[s]][inv[t]]])
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}
