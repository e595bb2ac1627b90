mod common;

use common::*;
use proptest::prelude::*;
use slicekit::{Coweight, EquivariantCharacter, QPolynomial, RootChar, RootDatum};

fn character_for(d: &RootDatum, n_terms: usize) -> impl Strategy<Value = EquivariantCharacter> {
    let rank = d.rank;
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec(-2i64..=2, rank), 1i64..=3),
        n_terms,
    )
    .prop_map(|terms| {
        let mut ch = EquivariantCharacter::zero();
        for (h, w, c) in terms {
            ch.add_term(h, RootChar(w), c);
        }
        ch
    })
}

fn group_character_xi() -> impl Strategy<Value = (RootDatum, EquivariantCharacter, Coweight)> {
    prop::sample::select(SMALL_GROUPS).prop_flat_map(|g| {
        let d = datum(g);
        let rank = d.rank;
        let ch = character_for(&d, 5);
        (
            Just(d),
            ch,
            prop::collection::vec(-3i64..=3, rank).prop_map(Coweight),
        )
    })
}

/// Sign of the `(ξ, d)`-weight of `ħ^h e^w`, expanded term by term.
fn brute_attracting(ch: &EquivariantCharacter, xi: &Coweight) -> Option<i64> {
    let mut total = 0;
    for t in ch.terms() {
        let s = if t.hbar != 0 {
            t.hbar.signum()
        } else {
            t.weight.pair(xi).signum()
        };
        if s == 0 {
            return None;
        }
        if s > 0 {
            total += t.coeff;
        }
    }
    Some(total)
}

fn invert_loop(ch: &EquivariantCharacter) -> EquivariantCharacter {
    let mut out = EquivariantCharacter::zero();
    for t in ch.terms() {
        out.add_term(-t.hbar, t.weight, t.coeff);
    }
    out
}

proptest! {
    #[test]
    fn attracting_plus_repelling_is_total((_d, ch, xi) in group_character_xi()) {
        // Attracting for (ξ, d) versus attracting for (-ξ, -d).
        let a = ch.attracting_dimension(&xi);
        let b = invert_loop(&ch).attracting_dimension(&xi.scaled(-1));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a + b, ch.total_dimension()),
            (a, b) => prop_assert!(a.is_err() && b.is_err()),
        }
    }

    #[test]
    fn attracting_matches_direct_sign_check((_d, ch, xi) in group_character_xi()) {
        prop_assert_eq!(ch.attracting_dimension(&xi).ok(), brute_attracting(&ch, &xi));
    }

    #[test]
    fn adding_a_monomial_and_its_inverse((d, ch, xi) in group_character_xi(), h in 1i64..=3, w in prop::collection::vec(-2i64..=2, 4)) {
        let w = RootChar(w[..d.rank].to_vec());
        let mut extended = ch.clone();
        extended.add_term(h, w.clone(), 1);
        extended.add_term(-h, -&w, 1);
        if let (Ok(before), Ok(after)) = (ch.attracting_dimension(&xi), extended.attracting_dimension(&xi)) {
            // ħ^h is attracting for h > 0, ħ^{-h} never is.
            prop_assert_eq!(after, before + 1);
        }
    }

    #[test]
    fn character_json_round_trip((_d, ch, _xi) in group_character_xi()) {
        let text = serde_json::to_string(&ch).unwrap();
        let back: EquivariantCharacter = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &ch);
        prop_assert_eq!(EquivariantCharacter::from_json(&ch.to_json()).unwrap(), ch);
    }

    #[test]
    fn polynomial_json_round_trip(pairs in prop::collection::vec((0u32..20, 1u64..5), 0..6)) {
        let p = QPolynomial::from_coeffs(pairs);
        prop_assert_eq!(QPolynomial::from_json(&p.to_json()).unwrap(), p.clone());
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPolynomial>(&text).unwrap(), p);
    }
}

#[test]
fn cancelling_terms_vanish() {
    let mut ch = EquivariantCharacter::monomial(1, RootChar(vec![1, -1]));
    ch.add_term(1, RootChar(vec![1, -1]), -1);
    assert!(ch.is_zero());
    assert_eq!(ch.num_terms(), 0);
}
