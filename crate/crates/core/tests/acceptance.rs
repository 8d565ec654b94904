//! One pass/fail line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use common::{full, hits_all, mask_of, members, Mask};
use etabound::bounders::{
    ft_hitting_set, hit_many_times, iterated_alpha_reduction, lt_decomposition, lt_hitting_set, perfect_hitting_set,
    psi_ft_bound, psi_lt_bound, psi_sst_bound, sst_hitting_set, star_free_hitting, CheckMode, Part,
};
use etabound::cradle::{
    build_rocker, is_cradle, p5_hitting_set, psi_p5_bound, restricted_hitting_set, Cradle, ExactProvider, FnProvider,
    P5Options,
};
use etabound::generators::{co_bipartite, cograph, enumerate_small_graphs, gnp, random, random_h_free, random_line_graph, split_graph, Probability};
use etabound::graph::graph6;
use etabound::graph::pattern::Pattern;
use etabound::oracle::{self, eta_exact, is_perfect_lovasz};
use etabound::ramsey::{ramsey_extract, RamseyKind};
use etabound::{Graph, VertexSet};
use rand_chacha::rand_core::RngCore;

type Check = std::result::Result<String, String>;

fn prob(num: u64, den: u64) -> Probability {
    Probability::new(num, den).unwrap()
}

fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_small_graphs(n).unwrap()).collect()
}

fn within(size: usize, bound: &BigUint) -> bool {
    BigUint::from(size) <= *bound
}

fn fail(g: &Graph, what: impl std::fmt::Display) -> String {
    format!("{}: {what}", graph6::encode(g))
}

/// Collects the first failure of a parallel sweep.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> std::result::Result<(), String> + Sync) -> std::result::Result<(), String> {
    items.par_iter().map(&f).find_first(|r| r.is_err()).unwrap_or(Ok(()))
}

fn exact_values() -> Check {
    for t in 1..=7 {
        let k = Graph::complete(t).unwrap();
        let (eta, _) = eta_exact(&k.view(), 1000).map_err(|e| e.to_string())?;
        if eta != t {
            return Err(format!("eta(K{t}) = {eta}"));
        }
    }
    for (name, g) in [("C5", Graph::cycle(5).unwrap()), ("P4", Graph::path(4).unwrap())] {
        let (eta, w) = eta_exact(&g.view(), 1000).map_err(|e| e.to_string())?;
        let brute = common::eta(&g);
        if eta != brute || !hits_all(&g, mask_of(w)) {
            return Err(format!("eta({name}) = {eta}, brute force gives {brute}"));
        }
    }
    Ok("eta(K_t) = t for t <= 7, eta(C5) = 3, eta(P4) = 2".into())
}

fn perfect_route() -> Check {
    let graphs = small_graphs(7);
    let count = AtomicUsize::new(0);
    sweep(&graphs, |g| {
        let v = g.view();
        if !is_perfect_lovasz(&v, 7).map_err(|e| fail(g, e))?.is_perfect() {
            return Ok(());
        }
        count.fetch_add(1, Ordering::Relaxed);
        let cert = perfect_hitting_set(&v, CheckMode::Strict).map_err(|e| fail(g, e))?;
        let omega = common::omega(g);
        if !hits_all(g, mask_of(cert.hitting_set)) || cert.size() > omega {
            return Err(fail(g, format!("|W| = {} with omega = {omega}", cert.size())));
        }
        Ok(())
    })?;
    Ok(format!("{} perfect graphs on at most 7 vertices", count.into_inner()))
}

fn lovasz_equivalence() -> Check {
    let graphs = small_graphs(7);
    let perfect = AtomicUsize::new(0);
    sweep(&graphs, |g| {
        let lovasz = is_perfect_lovasz(&g.view(), 7).map_err(|e| fail(g, e))?.is_perfect();
        let mut eta_bounded = true;
        for sub in 1..=full(g.n()) {
            let eta = common::eta_within(g, sub);
            let view = g.induced(VertexSet::from_iter(members(sub))).unwrap();
            let (lib_eta, _) = eta_exact(&view, 10_000).map_err(|e| fail(g, e))?;
            if lib_eta != eta {
                return Err(fail(g, format!("eta of {sub:#b}: oracle {lib_eta}, brute force {eta}")));
            }
            if eta > common::omega_within(g, sub) {
                eta_bounded = false;
                break;
            }
        }
        if lovasz != eta_bounded {
            return Err(fail(g, format!("Lovasz test says {lovasz}, eta <= omega everywhere is {eta_bounded}")));
        }
        if lovasz {
            perfect.fetch_add(1, Ordering::Relaxed);
        }
        Ok(())
    })?;
    Ok(format!("{} graphs agree, {} perfect", graphs.len(), perfect.into_inner()))
}

fn check_p5(g: &Graph) -> std::result::Result<(), String> {
    let v = g.view();
    let cert = p5_hitting_set(&v, P5Options::strict(true)).map_err(|e| fail(g, e))?;
    let omega = oracle::omega_number(&v);
    if !oracle::verify_hitting_set(&v, cert.hitting_set).map_err(|e| fail(g, e))? {
        return Err(fail(g, "p5 set does not hit"));
    }
    if !within(cert.size(), &psi_p5_bound(omega)) || cert.size() > g.n() {
        return Err(fail(g, format!("|W| = {} exceeds the bound", cert.size())));
    }
    Ok(())
}

/// Seeded P5-free graphs with up to 25 vertices: split graphs and
/// rejection samples at densities where P5 is rare.
fn p5_free_corpus(count: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for i in 0..count as u64 {
        let g = if i % 2 == 0 {
            split_graph(1 + (i as usize * 7) % 12, 1 + (i as usize * 5) % 13, prob(1 + i % 4, 5), i).unwrap()
        } else {
            let n = 8 + (i as usize) % 18;
            let p = if i % 4 == 1 { prob(1, n as u64) } else { prob(9, 10) };
            random_h_free(n, p, i, &Pattern::Path(5), 10_000).unwrap()
        };
        out.push(g);
    }
    out
}

fn p5_route() -> Check {
    let p5 = Graph::path(5).unwrap();
    let exhaustive: Vec<Graph> = small_graphs(7).into_iter().filter(|g| !common::contains_induced(g, &p5)).collect();
    sweep(&exhaustive, check_p5)?;
    let seeded = p5_free_corpus(200);
    sweep(&seeded, |g| {
        if g.n() <= 12 && common::contains_induced(g, &p5) {
            return Err(fail(g, "corpus graph contains P5"));
        }
        check_p5(g)
    })?;
    let largest = seeded.iter().map(Graph::n).max().unwrap_or(0);
    Ok(format!("{} exhaustive and {} seeded P5-free graphs (n up to {largest})", exhaustive.len(), seeded.len()))
}

/// Valid cradles in P5-free graphs on at most 12 vertices in which some
/// `Z`-vertex is not complete to `X`, `|X| ≥ 2`, and at least one maximum
/// stable set is restricted to the cradle.
fn cradle_corpus(count: usize) -> Vec<(Graph, Cradle)> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let n = 5 + (seed as usize) % 8;
        let g = match seed % 3 {
            0 => split_graph(n / 2, n - n / 2, prob(1 + seed % 3, 4), seed).unwrap(),
            1 => cograph(n, seed).unwrap(),
            _ => match random_h_free(n, prob(1 + seed % 4, 6), seed, &Pattern::Path(5), 200) {
                Ok(g) => g,
                Err(_) => continue,
            },
        };
        let v = g.view();
        let mut rng = random::rng(seed);
        for _ in 0..200 {
            let mut x = VertexSet::new();
            let mut z = VertexSet::new();
            for u in 0..n {
                match rng.next_u64() % 5 {
                    0 | 1 => {
                        x.insert(u);
                    }
                    2 | 3 => {
                        z.insert(u);
                    }
                    _ => {}
                }
            }
            if x.is_empty() || !is_cradle(&v, x, z).unwrap() {
                continue;
            }
            if z.iter().all(|u| x.is_subset(&g.neighbours(u))) {
                continue;
            }
            let cradle = Cradle { x, z };
            if x.len() < 2 || restricted_sets(&g, &cradle).is_empty() {
                continue;
            }
            out.push((g.clone(), cradle));
            break;
        }
    }
    out
}

fn restricted_sets(g: &Graph, c: &Cradle) -> Vec<Mask> {
    let (x, z) = (mask_of(c.x), mask_of(c.z));
    common::maximum_stable_sets(g).into_iter().filter(|&s| s & !(x | z) == 0 && s & x != 0).collect()
}

fn dsoothed() -> Check {
    let corpus = cradle_corpus(500);
    let restricted = AtomicUsize::new(0);
    sweep(&corpus, |(g, c)| {
        let v = g.view();
        let rocker = build_rocker(&v, c).map_err(|e| fail(g, e))?;
        let parts: Vec<Mask> = rocker.union().into_iter().map(mask_of).collect();
        let sets = restricted_sets(g, c);
        restricted.fetch_add(sets.len(), Ordering::Relaxed);
        if let Some(s) = sets.iter().find(|&&s| parts.iter().all(|&q| q & s == 0)) {
            return Err(fail(g, format!("restricted set {:?} misses the rocker of {:?}", members(*s), c)));
        }
        let omega = oracle::omega_number(&v);
        let provider = ExactProvider::new(g.n());
        let w = restricted_hitting_set(&v, c, &provider, omega, oracle::omega_number(&g.induced(c.x).unwrap()))
            .map_err(|e| fail(g, e))?;
        if let Some(s) = sets.iter().find(|&&s| s & mask_of(w) == 0) {
            return Err(fail(g, format!("restricted set {:?} misses W", members(*s))));
        }
        Ok(())
    })?;
    Ok(format!("{} cradles, {} restricted maximum stable sets, no violations", corpus.len(), restricted.into_inner()))
}

fn rocker_size() -> Check {
    let corpus = cradle_corpus(500);
    let widest = AtomicUsize::new(0);
    sweep(&corpus, |(g, c)| {
        let rocker = build_rocker(&g.view(), c).map_err(|e| fail(g, e))?;
        let omega = common::omega(g);
        widest.fetch_max(rocker.i.len().max(rocker.j.len()), Ordering::Relaxed);
        if rocker.i.len() > omega || rocker.j.len() > omega {
            return Err(fail(g, format!("|I| = {}, |J| = {}, omega = {omega}", rocker.i.len(), rocker.j.len())));
        }
        Ok(())
    })?;
    Ok(format!("{} rockers, largest side {}", corpus.len(), widest.into_inner()))
}

fn ramsey() -> Check {
    let seeds: Vec<u64> = (0..1000).collect();
    sweep(&seeds, |&seed| {
        let g = gnp(27, prob(1 + seed % 9, 10), seed).unwrap();
        let out = ramsey_extract(&g.view(), 3, 3).map_err(|e| fail(&g, e))?;
        let w = mask_of(out.witness);
        let ok = w.count_ones() == 3
            && match out.kind {
                RamseyKind::Clique => common::is_clique_mask(&g, w),
                RamseyKind::Stable => common::is_stable_mask(&g, w),
            };
        if !ok {
            return Err(fail(&g, format!("bad witness {:?}", out)));
        }
        Ok(())
    })?;
    Ok("1000 graphs on 27 vertices".into())
}

fn claw_free_corpus(count: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let g = if seed % 2 == 0 {
            random_line_graph(9, prob(3 + seed % 5, 10), seed).unwrap()
        } else {
            co_bipartite(1 + (seed as usize) % 20, 1 + (seed as usize * 3) % 20, prob(seed % 5, 4), seed).unwrap()
        };
        if (1..=40).contains(&g.n()) {
            out.push(g);
        }
    }
    out
}

fn star_route() -> Check {
    let corpus = claw_free_corpus(200);
    let claw = Pattern::Star(3).graph();
    sweep(&corpus, |g| {
        if common::contains_induced(g, &claw) {
            return Err(fail(g, "corpus graph contains a claw"));
        }
        let v = g.view();
        let omega = oracle::omega_number(&v);
        let cube = omega.pow(3);
        if let Some(u) = (0..g.n()).find(|&u| g.degree(u) >= cube) {
            return Err(fail(g, format!("vertex {u} has degree {} >= omega^3", g.degree(u))));
        }
        let cert = star_free_hitting(&v, 3, CheckMode::Strict).map_err(|e| fail(g, e))?;
        if !oracle::verify_hitting_set(&v, cert.hitting_set).map_err(|e| fail(g, e))? || cert.size() > cube {
            return Err(fail(g, format!("|W| = {} with omega = {omega}", cert.size())));
        }
        Ok(())
    })?;
    let largest = corpus.iter().map(Graph::n).max().unwrap_or(0);
    Ok(format!("{} claw-free graphs (n up to {largest})", corpus.len()))
}

fn l1_free_corpus(count: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let n = 8 + (seed as usize) % 18;
        let g = match seed % 3 {
            0 => co_bipartite(n / 2, n - n / 2, prob(seed % 5, 4), seed).unwrap(),
            1 => split_graph(n / 3, n - n / 3, prob(1 + seed % 3, 4), seed).unwrap(),
            _ => match random_h_free(n, prob(17, 20), seed, &Pattern::Lt(1), 1000) {
                Ok(g) => g,
                Err(_) => continue,
            },
        };
        out.push(g);
    }
    out
}

fn check_lt(g: &Graph) -> std::result::Result<(), String> {
    let v = g.view();
    let cert = lt_hitting_set(&v, 1, CheckMode::Strict).map_err(|e| fail(g, e))?;
    let omega = oracle::omega_number(&v);
    if !oracle::verify_hitting_set(&v, cert.hitting_set).map_err(|e| fail(g, e))? {
        return Err(fail(g, "lt set does not hit"));
    }
    if !within(cert.size(), &BigUint::from(omega).pow(14)) || cert.claimed_bound != psi_lt_bound(omega, 1) {
        return Err(fail(g, format!("|W| = {} with omega = {omega}", cert.size())));
    }
    if omega >= 2 {
        let dec = lt_decomposition(&v, 1).map_err(|e| fail(g, e))?;
        if let Some(d) = dec.parts.iter().filter_map(|p| p.d).find(|d| d.len() >= 2 * dec.k * dec.k) {
            return Err(fail(g, format!("|D| = {} with k = {}", d.len(), dec.k)));
        }
    }
    Ok(())
}

fn lt_route() -> Check {
    let l1 = Pattern::Lt(1).graph();
    let exhaustive: Vec<Graph> = small_graphs(7).into_iter().filter(|g| !common::contains_induced(g, &l1)).collect();
    sweep(&exhaustive, check_lt)?;
    let seeded = l1_free_corpus(200);
    sweep(&seeded, |g| {
        if common::contains_induced(g, &l1) {
            return Err(fail(g, "corpus graph contains L1"));
        }
        check_lt(g)
    })?;
    Ok(format!("{} exhaustive and {} seeded L1-free graphs", exhaustive.len(), seeded.len()))
}

fn s_and_f_routes() -> Check {
    let graphs = small_graphs(6);
    let mut counts = Vec::new();
    for (s, t) in [(1, 1), (2, 1)] {
        let h = Pattern::Sst(s, t).graph();
        let members: Vec<Graph> = graphs.iter().filter(|g| !common::contains_induced(g, &h)).cloned().collect();
        sweep(&members, |g| {
            let cert = sst_hitting_set(&g.view(), s, t, CheckMode::Strict).map_err(|e| fail(g, e))?;
            let omega = common::omega(g);
            if !hits_all(g, mask_of(cert.hitting_set)) || !within(cert.size(), &psi_sst_bound(omega, s, t)) {
                return Err(fail(g, format!("S{s},{t}: |W| = {}", cert.size())));
            }
            Ok(())
        })?;
        counts.push(members.len());
    }
    let f1 = Pattern::Ft(1).graph();
    let members: Vec<Graph> = graphs.iter().filter(|g| !common::contains_induced(g, &f1)).cloned().collect();
    sweep(&members, |g| {
        let cert = ft_hitting_set(&g.view(), 1, CheckMode::Strict).map_err(|e| fail(g, e))?;
        let omega = common::omega(g);
        if !hits_all(g, mask_of(cert.hitting_set)) || !within(cert.size(), &psi_ft_bound(omega, 1)) {
            return Err(fail(g, format!("F1: |W| = {}", cert.size())));
        }
        Ok(())
    })?;
    counts.push(members.len());
    for c in 1..=8usize {
        for s in 1..=3u32 {
            if psi_sst_bound(c, s as usize, 1) > BigUint::from(c).pow(2 * s + 1) {
                return Err(format!("Psi_sst({c},{s},1) exceeds c^(2s+1)"));
            }
        }
    }
    Ok(format!("S1,1: {}, S2,1: {}, F1: {} graphs; recurrence within c^(2s+1)", counts[0], counts[1], counts[2]))
}

fn lemma_harness() -> Check {
    // Iterated reduction with exact hitting sets.
    let seeds: Vec<u64> = (0..200).collect();
    sweep(&seeds, |&seed| {
        let n = 5 + (seed as usize) % 8;
        let g = gnp(n, prob(1 + seed % 7, 8), seed).unwrap();
        let mut rng = random::rng(seed ^ 0x5eed);
        let region: Mask = loop {
            let r = (rng.next_u64() as Mask) & full(n);
            if r != 0 {
                break r;
            }
        };
        let d = 1 + (rng.next_u64() % 4) as usize;
        let largest = AtomicUsize::new(0);
        let provider = FnProvider::new(n, |v: &etabound::View<'_>| {
            let (eta, w) = eta_exact(v, 100_000)?;
            largest.fetch_max(eta, Ordering::Relaxed);
            Ok(w)
        });
        let v = g.view();
        let region_set = VertexSet::from_iter(members(region));
        let dropped = iterated_alpha_reduction(&v, region_set, d, &provider).map_err(|e| fail(&g, e))?;
        let before = common::alpha_within(&g, region);
        let after = common::alpha_within(&g, region & !mask_of(dropped));
        if before - after != d.min(before) || dropped.len() > d * largest.load(Ordering::Relaxed) {
            return Err(fail(&g, format!("alpha {before} -> {after} with d = {d}, |D| = {}", dropped.len())));
        }
        Ok(())
    })?;

    // The star split behind the S_(s,t) route: x = lowest vertex, parts
    // (N(x), t) and (V \ N[x], s + 1). Every maximum stable set meets one of
    // the complements in fewer than d vertices, and the union hits them all.
    let graphs = small_graphs(6);
    let composed = AtomicUsize::new(0);
    for (s, t) in [(1, 1), (2, 1)] {
        let h = Pattern::Sst(s, t).graph();
        let corpus: Vec<&Graph> = graphs.iter().filter(|g| !common::contains_induced(g, &h)).collect();
        sweep(&corpus, |g| {
            let v = g.view();
            let all = v.vertices();
            let nx = v.neighbours(0);
            let closed = v.closed_neighbours(0);
            let exact = ExactProvider::new(g.n());
            let parts = [
                Part { a: nx, a_prime: all - nx, d: t, provider: &exact },
                Part { a: all - closed, a_prime: closed, d: s + 1, provider: &exact },
            ];
            let alpha = common::alpha(g);
            let stables = common::maximum_stable_sets(g);
            let covered = |st: Mask| parts.iter().any(|p| (st & mask_of(p.a_prime)).count_ones() < p.d as u32 && p.d <= alpha);
            if let Some(st) = stables.iter().find(|&&st| !parts.iter().any(|p| (st & mask_of(p.a_prime)).count_ones() < p.d as u32)) {
                return Err(fail(g, format!("stable set {:?} meets both complements too often", members(*st))));
            }
            let w = mask_of(hit_many_times(&v, &parts).map_err(|e| fail(g, e))?);
            if let Some(st) = stables.iter().find(|&&st| covered(st) && st & w == 0) {
                return Err(fail(g, format!("composition misses {:?}", members(*st))));
            }
            composed.fetch_add(1, Ordering::Relaxed);
            Ok(())
        })?;
    }

    // Cutset reduction is exercised through the F_t route on F1-free graphs
    // beyond the exhaustive range.
    let f1_free: Vec<Graph> = (0..100u64)
        .filter_map(|seed| random_h_free(8 + (seed as usize) % 7, prob(1 + seed % 3, 10), seed, &Pattern::Ft(1), 500).ok())
        .collect();
    sweep(&f1_free, |g| {
        let cert = ft_hitting_set(&g.view(), 1, CheckMode::Strict).map_err(|e| fail(g, e))?;
        if !hits_all(g, mask_of(cert.hitting_set)) {
            return Err(fail(g, "ft set does not hit"));
        }
        Ok(())
    })?;
    Ok(format!(
        "200 reductions exact, {} split compositions, {} seeded cutset compositions",
        composed.into_inner(),
        f1_free.len()
    ))
}

fn graph6_round_trip() -> Check {
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        let masks: Vec<u64> = (0..1u64 << pairs).collect();
        sweep(&masks, |&bits| {
            let g = common::labelled_graph(n, bits);
            let back = graph6::decode(&graph6::encode(&g)).map_err(|e| fail(&g, e))?;
            if back != g {
                return Err(fail(&g, "round trip changed the graph"));
            }
            Ok(())
        })?;
    }
    let seeds: Vec<u64> = (0..10_000).collect();
    sweep(&seeds, |&seed| {
        let g = gnp((seed % 51) as usize, prob(seed % 11, 10), seed).unwrap();
        let back = graph6::decode(&graph6::encode(&g)).map_err(|e| fail(&g, e))?;
        if back != g {
            return Err(fail(&g, "round trip changed the graph"));
        }
        Ok(())
    })?;
    Ok("all labelled graphs on at most 6 vertices and 10000 seeded graphs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 12] = [
        ("exact oracle golden values", exact_values, Duration::from_secs(1)),
        ("perfect route", perfect_route, Duration::from_secs(300)),
        ("Lovasz equivalence", lovasz_equivalence, Duration::from_secs(1800)),
        ("P5 route", p5_route, Duration::from_secs(1200)),
        ("restricted sets meet the rocker", dsoothed, Duration::from_secs(600)),
        ("rocker size", rocker_size, Duration::from_secs(600)),
        ("Ramsey extraction", ramsey, Duration::from_secs(60)),
        ("star route", star_route, Duration::from_secs(600)),
        ("L_t route", lt_route, Duration::from_secs(1200)),
        ("S and F routes", s_and_f_routes, Duration::from_secs(600)),
        ("lemma harness", lemma_harness, Duration::from_secs(600)),
        ("graph6 round trip", graph6_round_trip, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > *budget => Err(format!("took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                println!("[FAIL] AC-{} {name}: {why} ({elapsed:.2?})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
