use amoeba::classify::{
    check_big_corollary, check_fixed_wreath_embedding, check_hang_propagation,
    check_stem_propagation, check_theorem3, classify, is_local_amoeba, is_stem_transitive, Verdict,
};
use amoeba::construct::{b_family, comb_product, complete, paper_example, path};
use amoeba::fer::FerAnalysis;
use amoeba::oracle::rooted_corpus;

fn rooted_up_to(n: usize) -> Vec<amoeba::lgraph::LabeledGraph> {
    (1..=n).flat_map(|k| rooted_corpus(k).unwrap()).collect()
}

#[test]
fn counterexample_is_not_local_nor_stem_transitive() {
    let gh = paper_example("counterexample_GH_labeled").unwrap();
    assert!(!is_local_amoeba(&gh));
    assert!(!is_stem_transitive(&gh, &"1".parse().unwrap()).unwrap());
    let g = paper_example("counterexample_G").unwrap();
    let h = paper_example("counterexample_H").unwrap();
    let r = classify(&comb_product(&g, &h).unwrap(), "gh").unwrap();
    assert_eq!(r.fer_order.to_string(), "82944");
    assert!(r.skew.is_none());
    assert_eq!(r.block_system.as_ref().map(Vec::len), Some(3));
}

#[test]
fn p2_comb_b2_is_full_symmetric() {
    let c = check_big_corollary(&path(2).unwrap(), &b_family(2).unwrap()).unwrap();
    assert!(c.precondition && c.passed());
    assert_eq!(c.verdict, Verdict::FullSymmetric);
    assert_eq!(c.fer_order.to_string(), "3628800");
}

#[test]
fn fixed_wreath_of_triangles() {
    let k3 = complete(3).unwrap();
    let w = check_fixed_wreath_embedding(&k3, &k3).unwrap();
    assert!(w.equal());
    assert_eq!(w.wreath_order, 16u32.into());
}

#[test]
fn theorem3_star_leaf_reading() {
    // (c) ⇒ (a): a leaf in every orbit makes G* stem-symmetric
    for g in rooted_up_to(4) {
        let t = check_theorem3(&g).unwrap();
        if t.c_strict {
            assert!(t.a, "{}", g.to_json_string());
        }
    }
}

#[test]
fn stem_and_hang_propagate() {
    let small = rooted_up_to(3);
    let (mut stem, mut hang) = (0, 0);
    for g in &small {
        for h in &small {
            if let Some(ok) = check_stem_propagation(g, h).unwrap() {
                assert!(ok, "stem: {} * {}", g.to_json_string(), h.to_json_string());
                stem += 1;
            }
            if let Some(ok) = check_hang_propagation(g, h).unwrap() {
                assert!(ok, "hang: {} * {}", g.to_json_string(), h.to_json_string());
                hang += 1;
            }
        }
    }
    assert!(stem > 0 && hang > 0, "stem {stem}, hang {hang}");
}

#[test]
fn big_corollary_dichotomy() {
    let gs: Vec<_> = rooted_up_to(4)
        .into_iter()
        .filter(|g| !g.leaf_indices().is_empty() && is_local_amoeba(g))
        .collect();
    let hs: Vec<_> = rooted_up_to(3)
        .into_iter()
        .filter(|h| {
            let i = h.root_index().unwrap();
            FerAnalysis::new(h).hang_group(i).is_symmetric()
        })
        .collect();
    let mut seen = 0;
    for g in &gs {
        for h in &hs {
            if g.len() * h.len() > 9 {
                continue;
            }
            let c = check_big_corollary(g, h).unwrap();
            assert!(
                c.passed(),
                "{} * {}: {c:?}",
                g.to_json_string(),
                h.to_json_string()
            );
            seen += 1;
        }
    }
    assert!(seen > 0);
}
