//! Library results checked against deliberately naive reimplementations.

use std::collections::HashSet;

use rainbow_sat::codes::{
    balanced_type_family, concat_product, cyclic_family, exact_max_family, has_pair_property, verify_family, Letter,
};
use rainbow_sat::construct::{build_bipartite, maximal_extension};
use rainbow_sat::graph::{creates_rainbow_through, find_rainbow_clique, is_rainbow_saturated};
use rainbow_sat::oracle::{exact_rsat, lower_bound_witness_check};
use rainbow_sat::{Color, ColoredGraph, SearchConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn naive_rainbow(g: &ColoredGraph, s: usize) -> bool {
    subsets(g.n(), s).into_iter().any(|vs| {
        let mut seen = HashSet::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                match g.color(u + 1, v + 1) {
                    Some(c) if seen.insert(c) => {}
                    _ => return false,
                }
            }
        }
        true
    })
}

fn naive_saturated(g: &ColoredGraph, s: usize) -> bool {
    if naive_rainbow(g, s) {
        return false;
    }
    for u in 1..=g.n() {
        for v in u + 1..=g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            for c in 1..=g.t() {
                let mut h = g.clone();
                h.add_edge(u, v, c).unwrap();
                if !naive_rainbow(&h, s) {
                    return false;
                }
            }
        }
    }
    true
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

/// Graph whose pair `i` gets color `code[i]`, 0 meaning no edge.
fn decode(n: usize, t: Color, code: &[Color]) -> ColoredGraph {
    let mut g = ColoredGraph::new(n, t).unwrap();
    for (&(u, v), &c) in pairs(n).iter().zip(code) {
        if c > 0 {
            g.add_edge(u, v, c).unwrap();
        }
    }
    g
}

fn all_codes(len: usize, t: Color) -> impl Iterator<Item = Vec<Color>> {
    let total = (t as usize + 1).pow(len as u32);
    (0..total).map(move |mut x| {
        let mut code = vec![0; len];
        for c in code.iter_mut().rev() {
            *c = (x % (t as usize + 1)) as Color;
            x /= t as usize + 1;
        }
        code
    })
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, t: Color, p: f64) -> ColoredGraph {
    let mut g = ColoredGraph::new(n, t).unwrap();
    for (u, v) in pairs(n) {
        if rng.random_bool(p) {
            g.add_edge(u, v, rng.random_range(1..=t)).unwrap();
        }
    }
    g
}

#[test]
fn rainbow_detection_on_every_coloring_of_k4() {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // all 6^6 colorings is 46656 graphs; a random sample keeps this quick
    for _ in 0..4000 {
        let code: Vec<Color> = (0..6).map(|_| rng.random_range(1..=6)).collect();
        let g = decode(n, 6, &code);
        for s in 2..=4 {
            let found = find_rainbow_clique(&g, s).unwrap();
            assert_eq!(found.is_some(), naive_rainbow(&g, s), "{code:?} s={s}");
            if let Some(w) = found {
                let colors: HashSet<_> = w.edges.iter().map(|e| e.2).collect();
                assert_eq!(colors.len(), w.edges.len());
                assert!(w.edges.iter().all(|&(u, v, c)| g.color(u, v) == Some(c)));
            }
        }
    }
}

#[test]
fn creation_through_an_edge_matches_full_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1500 {
        let n = rng.random_range(3..=6);
        let t = rng.random_range(3..=6);
        let g = random_graph(&mut rng, n, t, 0.6);
        let s = rng.random_range(3..=n.min(4));
        let missing = g.non_edges();
        if missing.is_empty() || naive_rainbow(&g, s) {
            continue;
        }
        let (u, v) = missing[rng.random_range(0..missing.len())];
        let c = rng.random_range(1..=t);
        let mut h = g.clone();
        h.add_edge(u, v, c).unwrap();
        assert_eq!(creates_rainbow_through(&g, u, v, c, s).unwrap(), naive_rainbow(&h, s));
    }
}

#[test]
fn saturation_matches_naive_exhaustively_up_to_four_vertices() {
    for n in 2..=4 {
        let len = n * (n - 1) / 2;
        for code in all_codes(len, 3) {
            let g = decode(n, 3, &code);
            let r = is_rainbow_saturated(&g, 3).unwrap();
            assert_eq!(r.saturated, naive_saturated(&g, 3), "n={n} {code:?}");
        }
    }
}

#[test]
fn saturation_matches_naive_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.random_range(5..=6);
        let t = rng.random_range(3..=4);
        let p = rng.random_range(0.3..0.95);
        let g = random_graph(&mut rng, n, t, p);
        let r = is_rainbow_saturated(&g, 3).unwrap();
        assert_eq!(r.saturated, naive_saturated(&g, 3));
    }
}

fn naive_pair_property(t: usize, s: usize, x: &[Letter], y: &[Letter]) -> bool {
    subsets(t, s).into_iter().all(|set| {
        let inside = |c: Letter| set.contains(&(c as usize - 1));
        x.iter().zip(y).any(|(&a, &b)| a != b && inside(a) && inside(b))
    })
}

#[test]
fn pair_property_matches_subset_enumeration() {
    assert!(has_pair_property(3, 2, &[1, 2, 3], &[2, 3, 1]).unwrap());
    assert!(!has_pair_property(3, 2, &[1, 2, 1], &[2, 1, 2]).unwrap());
    assert!(!has_pair_property(3, 2, &[1, 2, 3], &[1, 2, 3]).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5000 {
        let t = rng.random_range(2..=9);
        let s = rng.random_range(2..=t);
        let k = rng.random_range(1..=7);
        let x: Vec<Letter> = (0..k).map(|_| rng.random_range(1..=t as Letter)).collect();
        let y: Vec<Letter> = (0..k).map(|_| rng.random_range(1..=t as Letter)).collect();
        assert_eq!(
            has_pair_property(t, s, &x, &y).unwrap(),
            naive_pair_property(t, s, &x, &y),
            "t={t} s={s} {x:?} {y:?}"
        );
    }
}

#[test]
fn family_verification_examples() {
    use rainbow_sat::StringFamily;
    let cyc = StringFamily::new(3, 3, vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap();
    assert!(verify_family(&cyc, 2).unwrap().ok);
    let bad = StringFamily::new(3, 3, vec![vec![1, 2, 3], vec![3, 2, 1]]).unwrap();
    let v = verify_family(&bad, 2).unwrap();
    assert!(!v.ok);
    assert_eq!(v.violation, Some((0, 1)));
}

/// Largest clique by plain recursive enumeration of all cliques.
fn naive_max_clique(adj: &[Vec<bool>]) -> usize {
    fn grow(adj: &[Vec<bool>], clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..adj.len() {
            if clique.iter().all(|&u| adj[u][v]) {
                clique.push(v);
                grow(adj, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(adj, &mut Vec::new(), 0, &mut best);
    best
}

fn all_strings(t: usize, k: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Letter>| {
                (1..=t as Letter).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[test]
fn exact_family_matches_clique_enumeration() {
    let cfg = SearchConfig::default();
    for (t, s, k) in [
        (2, 2, 1),
        (2, 2, 2),
        (2, 2, 3),
        (3, 2, 1),
        (3, 2, 2),
        (3, 2, 3),
        (3, 3, 2),
        (4, 3, 2),
        (4, 2, 2),
        (3, 2, 4),
        (4, 3, 3),
    ] {
        let strings = all_strings(t, k);
        let adj: Vec<Vec<bool>> = strings
            .iter()
            .map(|x| strings.iter().map(|y| naive_pair_property(t, s, x, y)).collect())
            .collect();
        let expected = naive_max_clique(&adj);
        let got = exact_max_family(t, s, k, &cfg).unwrap();
        assert_eq!(got.size, expected, "t={t} s={s} k={k}");
        assert!(verify_family(&got.family, s).unwrap().ok);
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn balanced_sizes_match_multinomial() {
    for (t, s, k) in [(3, 2, 3), (3, 2, 6), (2, 2, 2), (4, 3, 4), (4, 2, 8), (5, 3, 10), (3, 3, 6)] {
        let q = (k / t) as u64;
        let expected = factorial(s as u64 * q) / factorial(q).pow(s as u32);
        let f = balanced_type_family(t, s, k).unwrap();
        assert_eq!(f.len() as u64, expected, "t={t} s={s} k={k}");
        // only the clique on 1..=s is guaranteed: every pair differs at a
        // position holding two distinct letters from 1..=s
        for (i, x) in f.strings().iter().enumerate() {
            for y in &f.strings()[i + 1..] {
                assert!(x.iter().zip(y).any(|(&a, &b)| a != b && a as usize <= s && b as usize <= s));
            }
        }
    }
    let f = balanced_type_family(3, 2, 3).unwrap();
    assert_eq!(f.strings(), &[vec![1, 2, 3], vec![2, 1, 3]]);
    let f = balanced_type_family(2, 2, 2).unwrap();
    assert_eq!(f.strings(), &[vec![1, 2], vec![2, 1]]);
}

/// Minimum saturated edge count, the number of graphs attaining it, and the
/// first one in (edge set, coloring) lexicographic order.
fn naive_rsat(n: usize, s: usize, t: Color) -> (usize, u64, ColoredGraph) {
    let len = n * (n - 1) / 2;
    let mut best: Option<(usize, Vec<usize>, Vec<Color>)> = None;
    let mut count = 0;
    for code in all_codes(len, t) {
        let g = decode(n, t, &code);
        if !naive_saturated(&g, s) {
            continue;
        }
        let support: Vec<usize> = (0..len).filter(|&i| code[i] > 0).collect();
        let colors: Vec<Color> = support.iter().map(|&i| code[i]).collect();
        let key = (support.len(), support, colors);
        match &best {
            Some(b) if key.0 > b.0 => {}
            Some(b) if key.0 == b.0 => {
                count += 1;
                if key < *b {
                    best = Some(key);
                }
            }
            _ => {
                count = 1;
                best = Some(key);
            }
        }
    }
    let (e, support, colors) = best.expect("complete monochromatic graph is saturated");
    let mut code = vec![0; len];
    for (i, c) in support.into_iter().zip(colors) {
        code[i] = c;
    }
    (e, count, decode(n, t, &code))
}

#[test]
fn rsat_matches_exhaustive_colorings() {
    for n in 2..=4 {
        let (min, count, witness) = naive_rsat(n, 3, 3);
        let r = exact_rsat(n, 3, 3, 100_000_000, true).unwrap();
        assert_eq!(r.minimum, min, "n={n}");
        assert_eq!(r.count, Some(count), "n={n}");
        assert_eq!(r.witness, witness, "n={n}");
    }
}

/// Completions of `x`: every letter above `q` may become any letter of `[q]`.
fn completions(x: &[Color], q: Color) -> HashSet<Vec<Color>> {
    let mut out: HashSet<Vec<Color>> = HashSet::from([vec![]]);
    for &c in x {
        let choices: Vec<Color> = if c <= q { vec![c] } else { (1..=q).collect() };
        out = out
            .into_iter()
            .flat_map(|p| {
                choices.iter().map(move |&c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

#[test]
fn positional_disjointness_matches_materialized_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cyc = cyclic_family(3).unwrap();
    let product = build_bipartite(&concat_product(&cyc, &cyc).unwrap()).unwrap();
    let mut graphs = vec![maximal_extension(&product, 3).unwrap()];
    for _ in 0..400 {
        let n = rng.random_range(5..=9);
        let t = rng.random_range(3..=4);
        let p = rng.random_range(0.1..0.4);
        let g = random_graph(&mut rng, n, t, p);
        graphs.extend(maximal_extension(&g, 3));
    }
    let mut checked = 0;
    for h in graphs {
        let (n, t) = (h.n(), h.t());
        let q = (t + 2 - 3) as Color;
        for d in 1..=n {
            let r = lower_bound_witness_check(&h, 3, d).unwrap();
            for p in &r.pairs {
                let x = &r.vertices.iter().find(|b| b.v == p.v).unwrap().relabeled;
                let y = &r.vertices.iter().find(|b| b.v == p.w).unwrap().relabeled;
                let disjoint = completions(x, q).is_disjoint(&completions(y, q));
                assert_eq!(p.disjoint, disjoint, "{h:?} d={d}");
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "only {checked} pairs reached");
}
