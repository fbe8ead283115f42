//! Acceptance gate: runs every criterion at full size and prints one
//! PASS/FAIL line each. Exits non-zero on any failure other than the
//! documented limitation of the 5-path generator at N = 2 (see README).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use pstream::clause_stream::{sat_naive, ClauseStream};
use pstream::multipass_vc::{
    branching_pass_bound, compression_pass_bound, vc_branching, vc_iterative_compression, VcOutcome,
};
use pstream::oracles::{
    disjoint_union, domset_min, fvs_min, girth, longest_path, longest_path_length, sat2_solve, satd_brute,
    treewidth_exact, vc_min, CnfInstance, Literal,
};
use pstream::reductions::{
    extract_bit_via_solver, gen_index_2sat, gen_index_domset3, gen_index_girth3, gen_perm_5path,
    gen_perm_fvs0, gen_perm_treewidth1, sample_domset_est, Generated, GeneratedInstance,
    IndexInstance, PermInstance, ReductionTag,
};
use pstream::sparse_recovery::{Recovery, SparseRecoverySketch};
use pstream::sweep::Executor;
use pstream::threshold::{k_fvs_decide, k_path_decide, k_treewidth_decide, Certificate, ThresholdReport};
use pstream::workload::{churn_stream, edge_slots, graph_from_mask, labelled_graph_count, random_graph, shuffled_insert_only};
use pstream::{ReplayableStream, StoredGraph, StreamModel, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Default, Clone)]
struct Tally {
    checked: u64,
    failed: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }

    fn ok(&self) -> bool {
        self.failed == 0
    }

    fn summary(&self) -> String {
        match &self.first {
            None => format!("{} checks", self.checked),
            Some(f) => format!("{}/{} checks failed, first: {f}", self.failed, self.checked),
        }
    }
}

struct Verdict {
    id: u8,
    title: &'static str,
    pass: bool,
    known_limitation: bool,
    detail: String,
}

fn verdict(id: u8, title: &'static str, tally: &Tally, started: Instant) -> Verdict {
    Verdict {
        id,
        title,
        pass: tally.ok(),
        known_limitation: false,
        detail: format!("{}; {:.1}s", tally.summary(), started.elapsed().as_secs_f64()),
    }
}

fn pair<T>(exec: Executor, range: std::ops::Range<u64>, f: impl Fn(u64) -> (Tally, T) + Sync + Send) -> (Tally, T)
where
    T: Send + Default + Merge,
{
    exec.map_reduce(
        range,
        || (Tally::default(), T::default()),
        f,
        |(a1, b1), (a2, b2)| (a1.merge(a2), b1.merge_with(b2)),
    )
}

trait Merge {
    fn merge_with(self, other: Self) -> Self;
}

#[derive(Default)]
struct Count(u64);

impl Merge for Count {
    fn merge_with(self, other: Self) -> Self {
        Count(self.0 + other.0)
    }
}

impl Merge for Tally {
    fn merge_with(self, other: Self) -> Self {
        self.merge(other)
    }
}

// ---------------------------------------------------------------- k-VC

fn check_vc(g: &StoredGraph) -> (Tally, Tally) {
    let (mut agree, mut budget) = (Tally::default(), Tally::default());
    let opt = vc_min(g).expect("n <= 7").0;
    let stream = g.to_stream();
    for k in 0..=3usize {
        let runs = [
            ("branching", vc_branching(&stream, k), branching_pass_bound(k), 2 * k as u64 + 4),
            ("compression", vc_iterative_compression(&stream, k), compression_pass_bound(k), 7 * k as u64 + 6),
        ];
        for (name, run, pass_bound, word_bound) in runs {
            let run = run.expect("insert-only input");
            let correct = match &run.outcome {
                VcOutcome::Cover(c) => opt <= k && c.len() <= k && g.is_vertex_cover(c),
                VcOutcome::No => opt > k,
            };
            agree.check(correct, || format!("{name} k={k} opt={opt} got {:?} on {:?}", run.outcome, g));
            budget.check(run.passes <= pass_bound && run.peak_words <= word_bound, || {
                format!(
                    "{name} k={k}: passes {} (bound {pass_bound}), words {} (bound {word_bound})",
                    run.passes, run.peak_words
                )
            });
        }
    }
    (agree, budget)
}

fn criteria_1_2(exec: Executor) -> [Verdict; 2] {
    let started = Instant::now();
    let (mut agree, mut budget) = (Tally::default(), Tally::default());
    for n in 0..=7 {
        let slots = edge_slots(n);
        let (a, b) = pair(exec, 0..labelled_graph_count(n), |mask| {
            check_vc(&graph_from_mask(&slots, n, mask))
        });
        agree = agree.merge(a);
        budget = budget.merge(b);
    }
    [
        verdict(1, "multipass k-VC agrees with the exact oracle on all graphs n<=7, k<=3", &agree, started),
        verdict(2, "k-VC pass and word budgets", &budget, started),
    ]
}

// ---------------------------------------------------------- thresholds

struct Truth {
    n: usize,
    edges: usize,
    /// Vertices on a longest path; 0 only for the empty vertex set.
    path_vertices: usize,
    treewidth: usize,
    fvs: usize,
}

fn truth(g: &StoredGraph) -> Truth {
    Truth {
        n: g.n(),
        edges: g.edge_count(),
        path_vertices: longest_path(g).unwrap().len(),
        treewidth: treewidth_exact(g).unwrap(),
        fvs: fvs_min(g).unwrap().0,
    }
}

fn check_report(
    t: &mut Tally,
    g: &StoredGraph,
    stream: &ReplayableStream,
    what: &str,
    k: u64,
    expected: bool,
    report: ThresholdReport,
) {
    let cert_ok = match &report.certificate {
        None => true,
        Some(Certificate::Path(p)) => g.is_simple_path(p) && p.len() as u64 > k,
        Some(Certificate::VertexSet(s)) => g.is_feedback_vertex_set(s) && s.len() as u64 <= k,
    };
    let words_ok = stream.model() == StreamModel::InsertDelete
        || report.peak_words <= 2 * report.threshold + 4;
    t.check(
        report.decision.is_yes() == expected && cert_ok && words_ok && report.passes == 1,
        || format!("{what} k={k} {} expected {expected}, got {report:?} on {g:?}", stream.model()),
    );
}

fn check_thresholds(g: &StoredGraph, tr: &Truth, streams: &[ReplayableStream]) -> Tally {
    let mut t = Tally::default();
    for s in streams {
        for k in 0..=4u64 {
            let ku = k as usize;
            check_report(&mut t, g, s, "path", k, tr.path_vertices > ku, k_path_decide(s, k).unwrap());
            check_report(&mut t, g, s, "treewidth", k, tr.treewidth <= ku, k_treewidth_decide(s, k).unwrap());
            check_report(&mut t, g, s, "fvs", k, tr.fvs <= ku, k_fvs_decide(s, k).unwrap());
        }
    }
    t
}

fn check_extremal(tr: &Truth) -> Tally {
    let mut t = Tally::default();
    if tr.n == 0 {
        return t;
    }
    let (n, m) = (tr.n, tr.edges);
    t.check(m <= tr.treewidth * n, || format!("|E|={m} > tw*n={}", tr.treewidth * n));
    t.check(m <= n * (tr.fvs + 1), || format!("|E|={m} > n(fvs+1)={}", n * (tr.fvs + 1)));
    let path = tr.path_vertices - 1;
    t.check(path >= m / n, || format!("|E|={m}, n={n} but longest path {path}"));
    t
}

fn criteria_3_4(exec: Executor) -> [Verdict; 2] {
    let started = Instant::now();
    let (mut decide, mut extremal) = (Tally::default(), Tally::default());
    for n in 0..=7 {
        let slots = edge_slots(n);
        let (a, b) = pair(exec, 0..labelled_graph_count(n), |mask| {
            let g = graph_from_mask(&slots, n, mask);
            let tr = truth(&g);
            let mut rng = ChaCha8Rng::seed_from_u64(mask ^ ((n as u64) << 32));
            let streams = [g.to_stream(), churn_stream(&g, 3, &mut rng)];
            (check_thresholds(&g, &tr, &streams), check_extremal(&tr))
        });
        decide = decide.merge(a);
        extremal = extremal.merge(b);
    }
    let (a, b) = pair(exec, 0..1000, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e57_0000 + i);
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(n, p, &mut rng);
        let tr = truth(&g);
        let mut streams = Vec::new();
        for _ in 0..3 {
            streams.push(shuffled_insert_only(&g, &mut rng));
            streams.push(churn_stream(&g, 4, &mut rng));
        }
        (check_thresholds(&g, &tr, &streams), check_extremal(&tr))
    });
    decide = decide.merge(a);
    extremal = extremal.merge(b);
    [
        verdict(3, "threshold k-Path/k-Treewidth/k-FVS match oracles in both models", &decide, started),
        verdict(4, "edge-count extremal bounds", &extremal, started),
    ]
}

// ----------------------------------------------------- sparse recovery

/// One randomized update sequence; true when the sketch answers correctly.
fn sparse_case(capacity: usize, overflow: bool, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = 1u64 << 24;
    let survivors = if overflow {
        rng.gen_range(capacity + 1..=3 * capacity + 5)
    } else {
        rng.gen_range(0..=capacity)
    };
    let noise = rng.gen_range(0..=2 * capacity + 5);
    let elements = rand::seq::index::sample(&mut rng, universe as usize, survivors + noise);
    let mut events: Vec<(u64, i64)> = Vec::new();
    for (i, x) in elements.into_iter().enumerate() {
        let x = x as u64;
        let net: i64 = if i < survivors {
            *[-3, -2, -1, 1, 2, 3].choose(&mut rng).unwrap()
        } else {
            0
        };
        let churn = rng.gen_range(if net == 0 { 1 } else { 0 }..=3);
        for _ in 0..net.unsigned_abs() {
            events.push((x, net.signum()));
        }
        for _ in 0..churn {
            events.push((x, 1));
            events.push((x, -1));
        }
    }
    events.shuffle(&mut rng);
    let mut sketch = SparseRecoverySketch::new(capacity, universe, rng.gen());
    let mut oracle: HashMap<u64, i64> = HashMap::new();
    for &(x, d) in &events {
        if d > 0 {
            sketch.insert(x).unwrap();
        } else {
            sketch.delete(x).unwrap();
        }
        *oracle.entry(x).or_insert(0) += d;
    }
    let expected: BTreeMap<u64, i64> = oracle.into_iter().filter(|&(_, c)| c != 0).collect();
    let got = sketch.recover();
    let ok = if overflow {
        got == Recovery::Overflow
    } else {
        got == Recovery::Recovered(expected.clone())
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "M={capacity} seed={seed} expected {} survivors, got {got:?}",
            expected.len()
        ))
    }
}

fn criterion_5(exec: Executor) -> Verdict {
    let started = Instant::now();
    let t = exec.map_reduce(
        0..20_000,
        Tally::default,
        |i| {
            let capacity = [1, 4, 16, 64][(i % 4) as usize];
            let overflow = i >= 10_000;
            let mut t = Tally::default();
            let outcome = sparse_case(capacity, overflow, 0x5a5a_0000 + i);
            t.check(outcome.is_ok(), || outcome.unwrap_err());
            t
        },
        Tally::merge,
    );
    verdict(5, "sparse recovery exact within capacity, Overflow beyond", &t, started)
}

// ----------------------------------------------------------- reductions

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p = rest.clone();
            p.insert(pos, n as u32 - 1);
            out.push(p);
        }
    }
    out
}

fn vertex_count(g: &GeneratedInstance) -> usize {
    match &g.instance {
        Generated::Graph(s) => s.n(),
        Generated::Cnf(c) => c.num_vars(),
    }
}

fn round_trip(t: &mut Tally, g: GeneratedInstance, expected_bit: bool, size: usize) {
    let got = extract_bit_via_solver(&g.instance, g.tag).unwrap();
    let cross = match &g.instance {
        Generated::Cnf(cnf) => sat2_solve(cnf).unwrap() == satd_brute(cnf).unwrap(),
        Generated::Graph(_) => true,
    };
    t.check(
        got == expected_bit && g.truth == expected_bit && vertex_count(&g) == size && cross,
        || format!("{} truth {expected_bit} decoded {got}", g.tag),
    );
}

fn criterion_6(exec: Executor) -> Verdict {
    let started = Instant::now();
    let mut cases: Vec<(String, Tally)> = Vec::new();
    for n in [2usize, 4] {
        let width = n.trailing_zeros() as usize;
        let perms = permutations(n);
        let gens: [(ReductionTag, fn(&PermInstance) -> pstream::Result<GeneratedInstance>, usize); 3] = [
            (ReductionTag::Perm5Path, gen_perm_5path, 2 * n + 2),
            (ReductionTag::PermTreewidth1, gen_perm_treewidth1, 2 * n + 1),
            (ReductionTag::PermFvs0, gen_perm_fvs0, 2 * n + 1),
        ];
        for (tag, gen, size) in gens {
            let t = exec.map_reduce(
                0..perms.len() as u64,
                Tally::default,
                |pi| {
                    let mut t = Tally::default();
                    let delta = &perms[pi as usize];
                    for index in 0..n * width {
                        let p = PermInstance::new(delta.clone(), index).unwrap();
                        let bit = p.bit_string()[index];
                        round_trip(&mut t, gen(&p).unwrap(), bit, size);
                    }
                    t
                },
                Tally::merge,
            );
            cases.push((format!("{tag} N={n}"), t));
        }
        let mut shared = Tally::default();
        for delta in &perms {
            for index in 0..n * width {
                let p = PermInstance::new(delta.clone(), index).unwrap();
                shared.check(
                    gen_perm_treewidth1(&p).unwrap().instance == gen_perm_fvs0(&p).unwrap().instance,
                    || format!("treewidth/fvs graphs differ for {delta:?} I={index}"),
                );
            }
        }
        cases.push((format!("shared perm graph N={n}"), shared));
    }
    for r in [2usize, 3] {
        let len = r * r;
        let gens: [(ReductionTag, fn(&IndexInstance) -> pstream::Result<GeneratedInstance>, usize); 3] = [
            (ReductionTag::IndexDomset3, gen_index_domset3, 2 * r + 4),
            (ReductionTag::IndexGirth3, gen_index_girth3, 2 * r + 1),
            (ReductionTag::Index2Sat, gen_index_2sat, 2 * r),
        ];
        for (tag, gen, size) in gens {
            let t = exec.map_reduce(
                0..1u64 << len,
                Tally::default,
                |mask| {
                    let mut t = Tally::default();
                    for index in 0..len {
                        let x = IndexInstance::from_mask(mask, len, index).unwrap();
                        round_trip(&mut t, gen(&x).unwrap(), (mask >> index) & 1 == 1, size);
                    }
                    t
                },
                Tally::merge,
            );
            let label = if tag == ReductionTag::Index2Sat {
                format!("{tag} N={}", 2 * r)
            } else {
                format!("{tag} r={r}")
            };
            cases.push((label, t));
        }
    }
    let known = "perm-5path N=2";
    let failing: Vec<&str> = cases.iter().filter(|(_, t)| !t.ok()).map(|(l, _)| l.as_str()).collect();
    let total: u64 = cases.iter().map(|(_, t)| t.checked).sum();
    let mut detail = format!("{total} round trips over {} sweeps", cases.len());
    for (label, t) in cases.iter().filter(|(_, t)| !t.ok()) {
        detail.push_str(&format!("; {label}: {}", t.summary()));
    }
    if failing == [known] {
        detail.push_str(
            "; known limitation: with N=2 the zero side has one vertex, so no path of length 5 exists",
        );
    }
    detail.push_str(&format!("; {:.1}s", started.elapsed().as_secs_f64()));
    Verdict {
        id: 6,
        title: "reduction round trips recover Bob's bit",
        pass: failing.is_empty(),
        known_limitation: failing == [known],
        detail,
    }
}

// -------------------------------------------------------------- D_est

fn closed_masks(g: &StoredGraph) -> Vec<u128> {
    let mut masks: Vec<u128> = (0..g.n()).map(|v| 1u128 << v).collect();
    for (u, v) in g.edges() {
        masks[u as usize] |= 1 << v;
        masks[v as usize] |= 1 << u;
    }
    masks
}

/// Brute force: is there a dominating set with at most `size <= 2` vertices?
fn dominated_within_two(g: &StoredGraph, size: usize) -> bool {
    let masks = closed_masks(g);
    let full = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    if size >= 1 && masks.iter().any(|&m| m == full) {
        return true;
    }
    size >= 2
        && (0..masks.len()).any(|a| (a + 1..masks.len()).any(|b| masks[a] | masks[b] == full))
}

fn criterion_7(exec: Executor) -> Verdict {
    let started = Instant::now();
    let claim1 = exec.map_reduce(
        0..1000,
        Tally::default,
        |seed| {
            let mut t = Tally::default();
            let s = sample_domset_est(64, 32, seed, Some(0)).unwrap();
            let g = s.graph();
            let witness_ok = g.is_dominating_set(&s.witness());
            let no_single = !dominated_within_two(&g, 1);
            let oracle = domset_min(&g).map(|(v, _)| v);
            let structure = s.complement().len() == 4
                && s.complement().iter().all(|x| s.set(s.special()).contains(x))
                && (0..64).all(|i| s.set(i).len() == 32 && s.closed_set(i).contains(&(i as VertexId)))
                && g.edge_count() <= s.edge_bound();
            t.check(witness_ok && no_single && oracle == Ok(2) && structure, || {
                format!("seed {seed}: witness {witness_ok}, no single {no_single}, oracle {oracle:?}")
            });
            t
        },
        Tally::merge,
    );
    // oracle against brute force at a size where both are cheap; the
    // witness bounds the minimum by 2, a single vertex may still dominate
    let (brute, single) = pair(exec, 0..1000, |seed| {
        let mut t = Tally::default();
        let s = sample_domset_est(16, 8, seed, Some(0)).unwrap();
        let g = s.graph();
        let by_brute = if dominated_within_two(&g, 1) { 1 } else { 2 };
        let oracle = domset_min(&g).unwrap().0;
        t.check(
            g.is_dominating_set(&s.witness()) && dominated_within_two(&g, 2) && oracle == by_brute,
            || format!("n=16 seed {seed}: oracle {oracle}, brute force {by_brute}"),
        );
        (t, Count(u64::from(by_brute == 1)))
    });
    let above = exec.map_reduce(
        0..1000,
        || 0u64,
        |seed| {
            let s = sample_domset_est(64, 32, 1_000_000 + seed, Some(1)).unwrap();
            u64::from(!dominated_within_two(&s.graph(), 2))
        },
        |a, b| a + b,
    );
    let all = claim1.merge(brute);
    let freq = above as f64 / 1000.0;
    Verdict {
        id: 7,
        title: "dominating-set estimation: theta=0 samples at n=64, beta=32 have minimum exactly 2",
        pass: all.ok(),
        known_limitation: false,
        detail: format!(
            "{}; n=16 samples dominated by one vertex: {}; theta=1 fraction with minimum > 2 at n=64, beta=32: {freq:.3} (soft target 0.9, {}); {:.1}s",
            all.summary(),
            single.0,
            if freq >= 0.9 { "met" } else { "not met, reported only" },
            started.elapsed().as_secs_f64()
        ),
    }
}

// -------------------------------------------------------- AND/OR laws

/// One representative per isomorphism class, `1 <= n <= max_n`.
fn isomorphism_classes(max_n: usize) -> Vec<StoredGraph> {
    let mut reps = Vec::new();
    for n in 1..=max_n {
        let slots = edge_slots(n);
        let mut slot_of = vec![vec![0usize; n]; n];
        for (i, &(u, v)) in slots.iter().enumerate() {
            slot_of[u as usize][v as usize] = i;
            slot_of[v as usize][u as usize] = i;
        }
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0..labelled_graph_count(n) {
            let canon = perms
                .iter()
                .map(|p| {
                    slots.iter().enumerate().filter(|(i, _)| (mask >> i) & 1 == 1).fold(0u64, |acc, (_, &(u, v))| {
                        acc | 1 << slot_of[p[u as usize] as usize][p[v as usize] as usize]
                    })
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                reps.push(graph_from_mask(&slots, n, canon));
            }
        }
    }
    reps
}

fn criterion_8(exec: Executor) -> Verdict {
    let started = Instant::now();
    let classes = isomorphism_classes(5);
    let values: Vec<(usize, Option<usize>, usize)> = classes
        .iter()
        .map(|g| (treewidth_exact(g).unwrap(), girth(g).unwrap(), longest_path_length(g).unwrap()))
        .collect();
    let c = classes.len();
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    for a in 0..c {
        tuples.push(vec![a]);
        for b in a..c {
            tuples.push(vec![a, b]);
            for d in b..c {
                tuples.push(vec![a, b, d]);
            }
        }
    }
    let girth_at_least = |g: Option<usize>, k: usize| g.map_or(true, |x| x >= k);
    let mut t = exec.map_reduce(
        0..tuples.len() as u64,
        Tally::default,
        |i| {
            let mut t = Tally::default();
            let parts = &tuples[i as usize];
            let graphs: Vec<StoredGraph> = parts.iter().map(|&p| classes[p].clone()).collect();
            let union = disjoint_union(&graphs);
            let tw = treewidth_exact(&union).unwrap();
            let gi = girth(&union).unwrap();
            let lp = longest_path_length(&union).unwrap();
            let vals: Vec<_> = parts.iter().map(|&p| values[p]).collect();
            for k in 1..=2 {
                t.check((tw <= k) == vals.iter().all(|v| v.0 <= k), || {
                    format!("AND law for treewidth<={k} fails on classes {parts:?}")
                });
            }
            for k in 3..=5 {
                t.check(
                    girth_at_least(gi, k) == vals.iter().all(|v| girth_at_least(v.1, k)),
                    || format!("AND law for girth>={k} fails on classes {parts:?}"),
                );
            }
            for k in 1..=5 {
                t.check((lp >= k) == vals.iter().any(|v| v.2 >= k), || {
                    format!("OR law for path>={k} fails on classes {parts:?}")
                });
            }
            t
        },
        Tally::merge,
    );
    t.check(c == 52, || format!("expected 52 isomorphism classes on 1..=5 vertices, found {c}"));
    let mut v = verdict(8, "AND law (treewidth, girth) and OR law (k-Path) under disjoint union", &t, started);
    v.detail = format!("{} classes, {} multisets; {}", c, tuples.len(), v.detail);
    v
}

// ---------------------------------------------------------------- 2-SAT

fn random_2cnf(rng: &mut ChaCha8Rng) -> CnfInstance {
    let vars = rng.gen_range(1..=10u32);
    let clauses = rng.gen_range(0..=3 * vars as usize);
    let mut cnf = CnfInstance::new(vars as usize);
    let lit = |rng: &mut ChaCha8Rng, var: u32| {
        if rng.gen_bool(0.5) {
            Literal::neg(var)
        } else {
            Literal::pos(var)
        }
    };
    for _ in 0..clauses {
        let a = rng.gen_range(0..vars);
        if vars == 1 || rng.gen_bool(0.15) {
            let l = lit(rng, a);
            cnf.push_clause(vec![l]).unwrap();
        } else {
            let mut b = rng.gen_range(0..vars - 1);
            if b >= a {
                b += 1;
            }
            let (la, lb) = (lit(rng, a), lit(rng, b));
            cnf.push_clause(vec![la, lb]).unwrap();
        }
    }
    cnf
}

fn criterion_9(exec: Executor) -> Verdict {
    let started = Instant::now();
    let t = exec.map_reduce(
        0..10_000,
        Tally::default,
        |seed| {
            let mut t = Tally::default();
            let mut rng = ChaCha8Rng::seed_from_u64(0x2_5a7 + seed);
            let cnf = random_2cnf(&mut rng);
            let fast = sat2_solve(&cnf).unwrap();
            let brute = satd_brute(&cnf).unwrap();
            let naive = sat_naive(&ClauseStream::new(cnf.clone())).unwrap();
            t.check(fast == brute && naive.result == fast && naive.passes == 1, || {
                format!("seed {seed}: sat2 {fast:?}, brute {brute:?}, naive {:?}", naive.result)
            });
            t
        },
        Tally::merge,
    );
    verdict(9, "2-SAT solver matches brute force; sat-naive reproduces it", &t, started)
}

fn main() -> ExitCode {
    let exec = Executor::Parallel;
    let started = Instant::now();
    // PSTREAM_CRITERIA=3,7 restricts the run; the default is all nine
    let only: Option<Vec<u8>> = std::env::var("PSTREAM_CRITERIA")
        .ok()
        .map(|v| v.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let wanted = |ids: &[u8]| only.as_ref().map_or(true, |o| ids.iter().any(|i| o.contains(i)));
    let mut verdicts = Vec::new();
    if wanted(&[1, 2]) {
        verdicts.extend(criteria_1_2(exec));
    }
    if wanted(&[3, 4]) {
        verdicts.extend(criteria_3_4(exec));
    }
    let singles: [(u8, fn(Executor) -> Verdict); 5] = [
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    for (id, run) in singles {
        if wanted(&[id]) {
            verdicts.push(run(exec));
        }
    }
    verdicts.sort_by_key(|v| v.id);
    let mut unexpected = 0;
    for v in &verdicts {
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {} ({})", v.id, v.title, v.detail);
        if !v.pass && !v.known_limitation {
            unexpected += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria pass, {unexpected} unexpected failures, {:.1}s",
        verdicts.iter().filter(|v| v.pass).count(),
        verdicts.len(),
        started.elapsed().as_secs_f64()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
