#![allow(dead_code)]

use rand::Rng;
use rank1_lower::index_sets::{LowerSet, MultiIndex};

/// Grows `{0}` by repeatedly adding a random index whose predecessors are
/// all present, until `card` elements.
pub fn random_lower_set<R: Rng>(rng: &mut R, dim: usize, card: usize) -> LowerSet {
    let mut members = vec![MultiIndex::zero(dim)];
    while members.len() < card {
        let mut frontier: Vec<MultiIndex> = Vec::new();
        for k in &members {
            for j in 0..dim {
                let next = k.with_coord(j, k.coords()[j] + 1);
                let ok = !members.contains(&next)
                    && !frontier.contains(&next)
                    && (0..dim).all(|i| {
                        next.coords()[i] == 0
                            || members.contains(&next.with_coord(i, next.coords()[i] - 1))
                    });
                if ok {
                    frontier.push(next);
                }
            }
        }
        frontier.sort();
        let pick = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        members.push(pick);
    }
    LowerSet::new(dim, members).expect("construction keeps the set lower")
}

/// Every lower set in two dimensions with at most `max_card` elements,
/// i.e. every Young diagram with at most `max_card` cells.
pub fn all_lower_sets_2d(max_card: usize) -> Vec<LowerSet> {
    fn partitions(
        remaining: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            partitions(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut shapes = Vec::new();
    for m in 1..=max_card {
        partitions(m, m, &mut Vec::new(), &mut shapes);
    }
    shapes
        .into_iter()
        .map(|rows| {
            let members = rows.iter().enumerate().flat_map(|(i, &len)| {
                (0..len).map(move |j| MultiIndex::new(vec![i as u32, j as u32]))
            });
            LowerSet::new(2, members).unwrap()
        })
        .collect()
}

/// All vectors of `{0, …, n−1}^d` in lexicographic order.
pub fn all_generators(n: u64, dim: usize) -> Vec<Vec<i64>> {
    (0..n.pow(dim as u32))
        .map(|mut code| {
            let mut z = vec![0i64; dim];
            for j in (0..dim).rev() {
                z[j] = (code % n) as i64;
                code /= n;
            }
            z
        })
        .collect()
}

/// All sign patterns applied to `k`, duplicates included for zero entries.
fn all_sign_patterns(k: &[u32]) -> Vec<Vec<i64>> {
    let d = k.len();
    (0..1u32 << d)
        .map(|mask| {
            (0..d)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        -(k[j] as i64)
                    } else {
                        k[j] as i64
                    }
                })
                .collect()
        })
        .collect()
}

fn res(h: &[i64], z: &[i64], n: u64) -> i64 {
    h.iter()
        .zip(z)
        .map(|(a, b)| a * b)
        .sum::<i64>()
        .rem_euclid(n as i64)
}

/// Pairwise definitions of the four plans, written independently of the
/// library: `plan` is one of `'0'`, `'A'`, `'B'`, `'C'`.
pub fn naive_plan(set: &[MultiIndex], n: u64, z: &[i64], plan: char) -> bool {
    let mut mirror: Vec<Vec<i64>> = set
        .iter()
        .flat_map(|k| all_sign_patterns(k.coords()))
        .collect();
    mirror.sort();
    mirror.dedup();
    match plan {
        '0' => mirror
            .iter()
            .all(|h| h.iter().all(|&c| c == 0) || res(h, z, n) != 0),
        'A' => {
            for a in 0..mirror.len() {
                for b in a + 1..mirror.len() {
                    if res(&mirror[a], z, n) == res(&mirror[b], z, n) {
                        return false;
                    }
                }
            }
            true
        }
        'B' | 'C' => {
            for h in set {
                let mut flips = all_sign_patterns(h.coords());
                flips.sort();
                flips.dedup();
                for s in &flips {
                    for hp in set {
                        let hp_signed: Vec<i64> = hp.coords().iter().map(|&c| c as i64).collect();
                        let excluded = if plan == 'B' {
                            *s == hp_signed
                        } else {
                            h == hp
                        };
                        if !excluded && res(s, z, n) == res(&hp_signed, z, n) {
                            return false;
                        }
                    }
                }
            }
            true
        }
        _ => panic!("unknown plan {plan}"),
    }
}
