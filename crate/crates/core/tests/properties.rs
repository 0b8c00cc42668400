use proptest::prelude::*;

use permrel::group::{canonical_tails, equal_g, normal_form, todd_coxeter, UniversalGroup};
use permrel::monoid::{cancellativity_check, equal_s, LengthPartition};
use permrel::{all_signed_words, all_subgroups, PermGroup, PosWord, Presentation, SignedWord};

fn sym3_presentations() -> Vec<Presentation> {
    all_subgroups(3)
        .unwrap()
        .into_iter()
        .map(|h| Presentation::new(3, 2, h).unwrap())
        .collect()
}

#[test]
fn defining_relations_hold_for_every_element_of_h() {
    for l in [2, 3] {
        for h in all_subgroups(3).unwrap() {
            let p = Presentation::new(3, l, h).unwrap();
            for rank in 0..3usize.pow(l as u32) {
                let w = PosWord::unrank(rank, l, 3);
                for sigma in p.group().elements() {
                    let image =
                        PosWord(w.0.iter().map(|&c| sigma.apply(c as usize) as u8).collect());
                    assert!(equal_s(&w, &image, &p).unwrap(), "{p} {w} {image}");
                }
            }
        }
    }
}

#[test]
fn words_over_representatives_are_distinct() {
    for l in [2, 3] {
        for h in all_subgroups(3).unwrap() {
            let p = Presentation::new(3, l, h).unwrap();
            for m in 0..=6 {
                let part = LengthPartition::new(&p, m).unwrap();
                let mut seen = std::collections::HashSet::new();
                let r = p.reps().len();
                for idx in 0..r.pow(m as u32) {
                    let w = PosWord::unrank(idx, m, r);
                    let word = PosWord(w.0.iter().map(|&c| p.reps()[c as usize] as u8).collect());
                    assert!(seen.insert(part.class_id(&word)), "{p} {word}");
                }
            }
        }
    }
}

#[test]
fn semi_regular_subgroups_of_sym4_are_cancellative() {
    let mut tested = 0;
    for h in all_subgroups(4).unwrap() {
        let c = h.classify();
        if !c.semi_regular {
            continue;
        }
        let p = Presentation::new(4, 2, h).unwrap();
        let v = cancellativity_check(&p, 6).unwrap();
        assert_eq!(v.is_cancellative(), c.cancellative_predicted, "{p}");
        tested += 1;
    }
    assert!(tested >= 5);
}

#[test]
fn monoid_equality_implies_group_equality() {
    for p in sym3_presentations() {
        let ct = todd_coxeter(&p).unwrap();
        for m in 0..=4 {
            let part = LengthPartition::new(&p, m).unwrap();
            for rank in 0..part.word_count() {
                let w = PosWord::unrank(rank, m, 3);
                let c = part.canonical(part.class_of_rank(rank));
                assert!(equal_g(
                    &SignedWord::from(&w),
                    &SignedWord::from(&c),
                    &p,
                    &ct
                ));
            }
        }
    }
}

#[test]
fn normal_form_is_a_function_of_the_element() {
    for (n, l, gens) in [
        (2, 2, vec!["(1 2)"]),
        (3, 2, vec!["(1 2 3)"]),
        (2, 3, vec!["(1 2)"]),
    ] {
        let p = Presentation::from_cycles(n, l, &gens).unwrap();
        let ct = todd_coxeter(&p).unwrap();
        let tails = canonical_tails(&p, &ct);
        let words = all_signed_words(n, 3);
        let forms: Vec<_> = words
            .iter()
            .map(|w| {
                let nf = normal_form(w, &p, &ct, &tails);
                (nf.f, nf.tail)
            })
            .collect();
        for i in 0..words.len() {
            for j in i..words.len() {
                assert_eq!(
                    equal_g(&words[i], &words[j], &p, &ct),
                    forms[i] == forms[j],
                    "{p} {} {}",
                    words[i],
                    words[j]
                );
            }
        }
    }
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (
        prop::sample::select(vec![0usize, 1, 2, 3, 4, 5]),
        2usize..=3,
    )
        .prop_map(|(k, l)| {
            let h: PermGroup = all_subgroups(3).unwrap().swap_remove(k);
            Presentation::new(3, l, h).unwrap()
        })
}

fn pos_word(max: usize) -> impl Strategy<Value = PosWord> {
    prop::collection::vec(0u8..3, 0..=max).prop_map(PosWord)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monoid_equality_is_a_congruence(
        p in presentation_strategy(),
        u in pos_word(4),
        a in pos_word(2),
        b in pos_word(2),
        moves in prop::collection::vec((0usize..8, 0usize..8), 1..4),
    ) {
        // walk from u by random window rewrites to get an equal v
        let mut v = u.clone();
        for (pick, _) in moves {
            let ns: Vec<PosWord> = permrel::monoid::neighbors(&v, &p).into_iter().collect();
            if !ns.is_empty() {
                v = ns[pick % ns.len()].clone();
            }
        }
        prop_assert!(equal_s(&u, &v, &p).unwrap());
        prop_assert!(equal_s(&a.concat(&u).concat(&b), &a.concat(&v).concat(&b), &p).unwrap());
    }

    #[test]
    fn group_invariant_respects_products(
        p in presentation_strategy(),
        u in prop::collection::vec((0usize..3, any::<bool>()), 0..6),
        v in prop::collection::vec((0usize..3, any::<bool>()), 0..6),
    ) {
        let g = UniversalGroup::new(p).unwrap();
        let word = |x: &[(usize, bool)]| SignedWord(x.iter().map(|&(i, inv)| permrel::Letter::new(i, inv)).collect());
        let (u, v) = (word(&u), word(&v));
        prop_assert!(g.is_identity(&u.concat(&u.inverse())));
        prop_assert_eq!(g.equal(&u, &v), g.is_identity(&u.concat(&v.inverse())));
    }
}
