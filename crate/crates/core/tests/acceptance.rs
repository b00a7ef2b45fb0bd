//! Acceptance suite: one PASS/FAIL line per criterion, each against a
//! runtime target. Exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use amoeba::classify::{
    check_fixed_wreath_embedding, check_global_transitive, check_hang_bijection,
    check_hang_correspondence, check_theorem3, check_wreath_embedding, find_skew,
    is_stem_symmetric,
};
use amoeba::construct::{b_family, comb_product, complete, paper_example, path};
use amoeba::fer::{EdgeReplacement, FerAnalysis};
use amoeba::lgraph::{Edge, LabeledGraph};
use amoeba::oracle::{brute_coset, corpus, reachability, rooted_corpus};
use amoeba::permgroup::{
    compose, factorial, preserves_partition, wreath_product, BlockSystem, Label, PermGroup,
    Permutation,
};

type Check = std::result::Result<(), String>;
/// Name, runtime target in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: amoeba::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn l(s: &str) -> Label {
    s.parse().expect("label")
}

fn pair(b: u32, x: u32) -> Label {
    Label::pair(b.into(), x.into())
}

/// Small graphs: every isomorphism class on 1..=n vertices.
fn all_up_to(n: usize) -> Vec<LabeledGraph> {
    (1..=n).flat_map(|k| corpus(k).expect("corpus")).collect()
}

fn counterexample() -> Check {
    let gh = ok(paper_example("counterexample_GH_labeled"))?;
    let an = FerAnalysis::new(&gh);
    let fer = an.fer_group();
    ensure!(!fer.is_symmetric(), "reported as a local amoeba");
    let want = factorial(4).pow(3) * factorial(3);
    ensure!(want == 82944u32.into(), "(4!)^3 3! = {want}");
    ensure!(fer.order() == want, "|Fer| = {}", fer.order());
    // copy c of the path vertex x carries labels 4(x-1)+1..4x, which is the
    // index layout of the wreath domain
    let s4 = PermGroup::symmetric(path(4).unwrap().domain());
    let s3 = PermGroup::symmetric(path(3).unwrap().domain());
    let w = wreath_product(&s4, &s3);
    let to_gh = |p: &Permutation| Permutation::from_images(gh.domain(), p.images().to_vec());
    let w_gh = ok(PermGroup::from_generators(
        gh.domain(),
        w.generators()
            .iter()
            .map(to_gh)
            .collect::<amoeba::Result<_>>()
            .map_err(|e| e.to_string())?,
    ))?;
    ensure!(w_gh.order() == fer.order(), "|S4 wr S3| = {}", w_gh.order());
    ensure!(
        ok(w_gh.is_subgroup_of(&fer))?,
        "wreath generator outside Fer"
    );
    ensure!(
        ok(fer.is_subgroup_of(&w_gh))?,
        "Fer generator outside the wreath product"
    );
    let one = ok(gh.index_of(&l("1")))?;
    let two = ok(gh.index_of(&l("2")))?;
    let mut orbit: Vec<String> = an
        .fixed_group(one)
        .orbit_of(two)
        .into_iter()
        .map(|v| gh.label(v).to_string())
        .collect();
    orbit.sort();
    ensure!(
        orbit == ["2", "3", "4"],
        "orbit of 2 under Fer^1 = {orbit:?}"
    );
    Ok(())
}

fn hang_symm_8() -> Check {
    let g = ok(paper_example("hang_symm_8"))?;
    let an = FerAnalysis::new(&g);
    let i = ok(g.index_of(&l("1")))?;
    let h = an.hang_group(i).order();
    ensure!(h == 40320u32.into(), "|H_1| = {h}");
    let f = an.fixed_group(i).order();
    ensure!(f < 5040u32.into(), "|Fer^1| = {f}");
    Ok(())
}

fn paths() -> Check {
    for n in 2..=8 {
        let p = ok(path(n))?;
        let an = FerAnalysis::new(&p);
        let order = an.fer_group().order();
        ensure!(order == factorial(n), "|Fer(P{n})| = {order}");
        for leaf in p.leaf_indices() {
            ensure!(
                an.hang_group(leaf).is_symmetric(),
                "P{n} not hang-symmetric at {}",
                p.label(leaf)
            );
        }
    }
    Ok(())
}

/// In `G ∗ P_n` with `P_n` rooted at its end 1, the path of leaf `x` of `G`
/// loses its far end to the far end of the path of `x`'s neighbour `y`.
fn path_skew(gh: &LabeledGraph, n: u32, x: u32, y: u32) -> Check {
    let r = ok(EdgeReplacement::new(
        ok(Edge::new(pair(n, x), pair(n - 1, x)))?,
        ok(Edge::new(pair(n, x), pair(n, y)))?,
    ))?;
    let coset = ok(FerAnalysis::new(gh).coset(&r))?;
    let cycles: Vec<Vec<Label>> = (2..=n).map(|k| vec![pair(k, y), pair(k - 1, x)]).collect();
    let inv = ok(Permutation::from_cycles(gh.domain(), &cycles))?;
    ensure!(
        coset.perms.contains(&inv),
        "{r}: {} not in its coset",
        inv.to_cycle_string()
    );
    let bs = ok(BlockSystem::product_blocks(gh.domain()))?;
    ensure!(
        !ok(preserves_partition(&inv, &bs))?,
        "{} keeps the blocks",
        inv.to_cycle_string()
    );
    Ok(())
}

fn path_combs() -> Check {
    for (g, x, y) in [(path(2), 2, 1), (path(3), 1, 2)] {
        let g = ok(g)?;
        for n in [2usize, 3] {
            let gh = ok(comb_product(&g, &ok(path(n))?))?;
            let order = FerAnalysis::new(&gh).fer_group().order();
            ensure!(
                order == factorial(g.len() * n),
                "|Fer(P{} * P{n})| = {order}",
                g.len()
            );
            let bs = ok(BlockSystem::product_blocks(gh.domain()))?;
            let skew = ok(find_skew(&gh, &bs))?;
            let Some(skew) = skew else {
                return Err(format!("no skew in P{} * P{n}", g.len()));
            };
            ensure!(
                !ok(preserves_partition(&skew.perm, &bs))?,
                "returned skew keeps the blocks"
            );
            path_skew(&gh, n as u32, x, y)?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let graphs = all_up_to(5);
    ensure!(
        graphs.len() == 52,
        "{} classes on <= 5 vertices",
        graphs.len()
    );
    ensure!(ok(corpus(5))?.len() == 34, "34 classes on 5 vertices");
    for g in &graphs {
        let an = FerAnalysis::new(g);
        let fer = an.fer_group();
        let reach = ok(reachability(g))?;
        ensure!(
            fer.is_symmetric() == reach.is_complete(),
            "{}: group says {}, reachability {}/{}",
            g.to_json_string(),
            fer.is_symmetric(),
            reach.reached.len(),
            reach.total_copies
        );
        let quotient = fer.order() / an.automorphisms().order();
        ensure!(
            quotient == reach.reached.len().into(),
            "{}: |Fer|/|A| = {quotient}, reached {}",
            g.to_json_string(),
            reach.reached.len()
        );
    }
    Ok(())
}

fn rooted_up_to(n: usize) -> Vec<LabeledGraph> {
    (1..=n)
        .flat_map(|k| rooted_corpus(k).expect("corpus"))
        .collect()
}

/// The literal leaf reading of (c) may only diverge on graphs with an
/// isolated vertex other than the root.
fn theorem3_sweep() -> Check {
    for g in rooted_up_to(5) {
        let t = ok(check_theorem3(&g))?;
        ensure!(t.consistent(), "{}: {t:?}", g.to_json_string());
        let root = g.root_index();
        let isolated = g.isolated_indices().into_iter().any(|v| Some(v) != root);
        ensure!(
            t.c == t.c_strict || isolated,
            "{}: {t:?}",
            g.to_json_string()
        );
    }
    Ok(())
}

fn global_transitive() -> Check {
    for g in all_up_to(5) {
        let t = ok(check_global_transitive(&g))?;
        ensure!(t.consistent(), "{}: {t:?}", g.to_json_string());
    }
    Ok(())
}

fn hang_correspondence() -> Check {
    for g in rooted_up_to(5) {
        let hc = ok(check_hang_correspondence(&g))?;
        ensure!(hc.consistent(), "{}: {hc:?}", g.to_json_string());
        ensure!(
            ok(check_hang_bijection(&g))?,
            "{}: bijection fails",
            g.to_json_string()
        );
    }
    Ok(())
}

fn coset_law() -> Check {
    for g in all_up_to(6) {
        let an = FerAnalysis::new(&g);
        let aut = an.automorphisms().elements();
        let mut engine = an.replacements();
        engine.sort();
        let mut brute = Vec::new();
        for (i, j) in g.index_edges() {
            for (k, m) in g.index_non_edges() {
                let r = ok(EdgeReplacement::new(
                    ok(Edge::new(g.label(i).clone(), g.label(j).clone()))?,
                    ok(Edge::new(g.label(k).clone(), g.label(m).clone()))?,
                ))?;
                let c = ok(brute_coset(&g, &r))?;
                if c.is_empty() {
                    continue;
                }
                ensure!(
                    c.len() == aut.len(),
                    "{}: |{r}| = {}",
                    g.to_json_string(),
                    c.len()
                );
                let mut left: Vec<Permutation> = aut
                    .iter()
                    .map(|a| compose(a, &c[0]))
                    .collect::<amoeba::Result<_>>()
                    .map_err(|e| e.to_string())?;
                left.sort();
                ensure!(
                    left == c,
                    "{}: {r} is not a coset of Aut",
                    g.to_json_string()
                );
                ensure!(
                    ok(an.coset(&r))?.perms == c,
                    "{}: engine coset of {r} differs",
                    g.to_json_string()
                );
                brute.push(r);
            }
        }
        brute.push(EdgeReplacement::Neutral);
        brute.sort();
        ensure!(
            engine == brute,
            "{}: feasible sets differ",
            g.to_json_string()
        );
    }
    Ok(())
}

fn wreath_embeddings() -> Check {
    let tri_pendant = ok(paper_example("counterexample_H"))?;
    for (name, g, h) in [
        ("(P2,P2)", path(2), path(2)),
        ("(P3,K3)", path(3), complete(3)),
        ("(P3,triangle+pendant)", path(3), Ok(tri_pendant)),
    ] {
        let w = ok(check_wreath_embedding(&ok(g)?, &ok(h)?))?;
        ensure!(w.passed(), "{name}: {w:?}");
    }
    let k3 = ok(complete(3))?;
    let w = ok(check_fixed_wreath_embedding(&k3, &k3))?;
    ensure!(w.equal(), "(K3,K3): {w:?}");
    Ok(())
}

fn b_family_check() -> Check {
    for n in [2, 3] {
        let b = ok(b_family(n))?;
        let leaf = b.root().expect("rooted at the new leaf").clone();
        ensure!(
            ok(is_stem_symmetric(&b, &leaf))?,
            "B{n} not stem-symmetric at {leaf}"
        );
    }
    let pb = ok(comb_product(&ok(path(2))?, &ok(b_family(2))?))?;
    let order = FerAnalysis::new(&pb).fer_group().order();
    ensure!(order == factorial(10), "|Fer(P2 * B2)| = {order}");
    Ok(())
}

fn maximality() -> Check {
    let s2 = PermGroup::symmetric(path(2).unwrap().domain());
    let w = wreath_product(&s2, &s2);
    ensure!(w.order() == 8u32.into(), "|S2 wr S2| = {}", w.order());
    let s4 = PermGroup::symmetric(w.domain());
    for g in s4.elements() {
        if ok(w.contains(&g))? {
            continue;
        }
        let mut gens = w.generators().to_vec();
        gens.push(g.clone());
        let over = ok(PermGroup::from_generators(w.domain(), gens))?;
        ensure!(
            over.order() == 24u32.into(),
            "<S2 wr S2, {}> has order {}",
            g.to_cycle_string(),
            over.order()
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("counterexample reproduction", 10, counterexample),
        ("hang_symm_8 groups", 5, hang_symm_8),
        ("paths", 30, paths),
        ("path comb products", 60, path_combs),
        ("oracle equivalence", 120, oracle_equivalence),
        ("stem-symmetry characterization sweep", 300, theorem3_sweep),
        ("global amoeba vs transitivity", 300, global_transitive),
        ("hang correspondence", 300, hang_correspondence),
        ("coset law", u64::MAX, coset_law),
        ("wreath embeddings", 120, wreath_embeddings),
        ("B-family", 120, b_family_check),
        ("maximality micro-check", 1, maximality),
    ];
    let mut failed = 0;
    for (k, (name, secs, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let limit = Duration::from_secs(*secs);
        let target = if *secs == u64::MAX {
            "none".to_string()
        } else {
            format!("{secs}s")
        };
        let verdict = match result {
            Ok(()) if took < limit => Ok(()),
            Ok(()) => Err("over runtime target".to_string()),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!(
                "PASS {:>2} {name} ({:.2}s, target {target})",
                k + 1,
                took.as_secs_f64()
            ),
            Err(e) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name} ({:.2}s, target {target}): {e}",
                    k + 1,
                    took.as_secs_f64()
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
