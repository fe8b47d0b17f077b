use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use monodromy::grouptheory::{
    abelianization, find_epimorphisms, fundamental_identity_holds, invariant_factors, tietze_simplify,
    tietze_simplify_tracked, FiniteGroupTable, FreeWord, GroupPresentation, TietzeLimits,
};
use monodromy::vankampen::{artin_act, projective_relator, BraidWord};

const STRANDS: usize = 4;

fn braid() -> impl Strategy<Value = BraidWord> {
    let letter = (1..STRANDS as i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k });
    prop::collection::vec(letter, 0..8).prop_map(|l| BraidWord::new(STRANDS, l).unwrap())
}

fn word(gens: i32, max_len: usize) -> impl Strategy<Value = FreeWord> {
    let letter = (1..=gens, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k });
    prop::collection::vec(letter, 0..max_len).prop_map(FreeWord::new)
}

fn presentation() -> impl Strategy<Value = GroupPresentation> {
    prop::collection::vec(word(3, 7), 1..4).prop_map(|rs| GroupPresentation::new(3, rs))
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

proptest! {
    #[test]
    fn artin_action_is_a_left_action(a in braid(), b in braid(), w in word(STRANDS as i32, 6)) {
        prop_assert_eq!(artin_act(&a.mul(&b), &w), artin_act(&a, &artin_act(&b, &w)));
    }

    #[test]
    fn inverse_braid_undoes_the_action(a in braid(), w in word(STRANDS as i32, 6)) {
        prop_assert_eq!(artin_act(&a.inverse(), &artin_act(&a, &w)), w);
    }

    #[test]
    fn boundary_product_is_fixed(a in braid()) {
        prop_assert_eq!(artin_act(&a, &projective_relator(STRANDS)), projective_relator(STRANDS));
    }

    #[test]
    fn fox_fundamental_identity(w in word(3, 10)) {
        prop_assert!(fundamental_identity_holds(&w, 3));
    }

    #[test]
    fn tietze_keeps_abelianization_and_quotients(p in presentation()) {
        let s = tietze_simplify(&p, &TietzeLimits::default());
        prop_assert_eq!(abelianization(&p), abelianization(&s));
        let s3 = FiniteGroupTable::symmetric(3);
        prop_assert_eq!(find_epimorphisms(&p, &s3).len(), find_epimorphisms(&s, &s3).len());
    }

    #[test]
    fn mapped_relators_are_consequences(p in presentation()) {
        let t = tietze_simplify_tracked(&p, &TietzeLimits::default());
        let s3 = FiniteGroupTable::symmetric(3);
        let before = (abelianization(&t.presentation), find_epimorphisms(&t.presentation, &s3).len());
        let mut q = t.presentation.clone();
        for r in &p.relators {
            q.add_relator(t.map_word(r));
        }
        prop_assert_eq!((abelianization(&q), find_epimorphisms(&q, &s3).len()), before);
    }

    #[test]
    fn smith_form_divides_and_multiplies_to_det(m in prop::collection::vec(prop::collection::vec(-9i64..10, 3), 3)) {
        let rows: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let d = invariant_factors(&rows);
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let content = m.iter().flatten().fold(0i64, |g, &v| g.gcd(&v));
        if let Some(first) = d.first() {
            prop_assert_eq!(first.abs(), BigInt::from(content));
        }
        let det = det3(&m);
        if det != 0 {
            prop_assert_eq!(d.len(), 3);
            let prod: BigInt = d.iter().product();
            prop_assert_eq!(prod.abs(), BigInt::from(det.abs()));
        } else {
            prop_assert!(d.len() < 3);
        }
    }
}
