use amoeba::fer::FerAnalysis;
use amoeba::oracle::{corpus, rooted_corpus};
use amoeba::permgroup::{compose, PermGroup};

#[test]
fn cosets_are_closed_under_automorphisms() {
    for n in 1..=5 {
        for g in corpus(n).unwrap() {
            let an = FerAnalysis::new(&g);
            let aut = an.automorphisms().elements();
            for c in an.cosets().unwrap() {
                assert_eq!(c.perms.len(), aut.len());
                for s in &c.perms {
                    assert!(g
                        .embed(s)
                        .unwrap()
                        .same_edges(&c.replacement.apply(&g).unwrap()));
                    for a in &aut {
                        assert!(c.perms.contains(&compose(a, s).unwrap()));
                    }
                }
            }
        }
    }
}

#[test]
fn compact_generators_match_explicit_sets() {
    for n in 1..=6 {
        for g in corpus(n).unwrap() {
            let an = FerAnalysis::new(&g);
            let explicit =
                PermGroup::from_generators(g.domain(), an.generating_set().unwrap()).unwrap();
            assert!(
                explicit.same_group(&an.fer_group()).unwrap(),
                "{}",
                g.to_json_string()
            );
        }
    }
}

#[test]
fn compact_fixed_and_hang_groups_match_explicit_sets() {
    for n in 1..=5 {
        for g in rooted_corpus(n).unwrap() {
            let i = g.root_index().unwrap();
            let an = FerAnalysis::new(&g);
            let e = an.fixed_generating_set(i).unwrap();
            assert!(e.iter().all(|p| p.fixes(i)));
            let fixed = PermGroup::from_generators(g.domain(), e.clone()).unwrap();
            assert!(
                fixed.same_group(&an.fixed_group(i)).unwrap(),
                "{}",
                g.to_json_string()
            );
            let mut h = e;
            h.extend(an.automorphisms().generators().iter().cloned());
            let hang = PermGroup::from_generators(g.domain(), h).unwrap();
            assert!(
                hang.same_group(&an.hang_group(i)).unwrap(),
                "{}",
                g.to_json_string()
            );
        }
    }
}

#[test]
fn groups_nest() {
    for n in 1..=5 {
        for g in rooted_corpus(n).unwrap() {
            let i = g.root_index().unwrap();
            let an = FerAnalysis::new(&g);
            let fer = an.fer_group();
            assert!(an.automorphisms().is_subgroup_of(&fer).unwrap());
            assert!(an.fixed_group(i).is_subgroup_of(&an.hang_group(i)).unwrap());
            assert!(an.hang_group(i).is_subgroup_of(&fer).unwrap());
        }
    }
}
