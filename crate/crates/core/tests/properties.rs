use ballot_snakes::path::{parse_labels, parse_steps};
use ballot_snakes::{
    is_snake, phi, psi, psi_trace, standardize, BallotPath, LabeledBallotPath, LevelCode, Snake,
    Step,
};
use num_bigint::BigUint;
use proptest::prelude::*;

/// A ballot path drawn step by step, forced up at height zero.
fn ballot_steps(max_len: usize) -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|coins| {
        let mut height = 0u32;
        coins
            .into_iter()
            .map(|down| {
                if down && height > 0 {
                    height -= 1;
                    Step::Down
                } else {
                    height += 1;
                    Step::Up
                }
            })
            .collect()
    })
}

fn labeled_path(max_len: usize) -> impl Strategy<Value = LabeledBallotPath> {
    ballot_steps(max_len).prop_flat_map(|steps| {
        let path = BallotPath::new(steps).expect("generated path is ballot");
        let ranges: Vec<_> = path.heights().into_iter().map(|h| 0..=h).collect();
        (Just(path), ranges).prop_map(|(path, labels)| {
            LabeledBallotPath::new(path, labels).expect("labels within height")
        })
    })
}

fn snake(max_len: usize) -> impl Strategy<Value = Snake> {
    labeled_path(max_len).prop_map(|p| psi(&p).expect("psi is total on labeled paths"))
}

/// Distinct nonzero integers, each with a random sign.
fn super_alphabet(max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::btree_set(1i32..500, 0..=max_len)
        .prop_flat_map(|set| {
            let n = set.len();
            (Just(set), prop::collection::vec(any::<bool>(), n))
        })
        .prop_flat_map(|(set, signs)| {
            let signed: Vec<i32> = set
                .into_iter()
                .zip(signs)
                .map(|(m, neg)| if neg { -m } else { m })
                .collect();
            Just(signed).prop_shuffle()
        })
}

proptest! {
    #[test]
    fn psi_then_phi_is_identity(p in labeled_path(40)) {
        let s = psi(&p).unwrap();
        prop_assert!(is_snake(s.as_signed_permutation()));
        prop_assert_eq!(s.len(), p.len());
        prop_assert_eq!(phi(&s), p);
    }

    #[test]
    fn alpha_is_end_height(s in snake(40)) {
        prop_assert_eq!(s.alpha(), phi(&s).end_height() as i64);
    }

    #[test]
    fn dyck_paths_give_unsigned_snakes(p in labeled_path(30)) {
        let s = psi(&p).unwrap();
        if p.is_dyck() && p.len() % 2 == 0 {
            prop_assert!(s.is_unsigned());
        }
    }

    #[test]
    fn stages_shrink_by_one(p in labeled_path(25)) {
        let trace = psi_trace(&p).unwrap();
        prop_assert_eq!(trace.stages.len(), p.len());
        for (i, stage) in trace.stages.iter().enumerate() {
            prop_assert_eq!(stage.path.len(), p.len() - i);
            prop_assert_eq!(stage.gamma.len(), i + 1);
        }
        let mut r = trace.contracted();
        r.sort_unstable();
        prop_assert_eq!(r, (1..=p.len()).collect::<Vec<_>>());
    }

    #[test]
    fn standardize_preserves_signs_and_order(v in super_alphabet(20)) {
        let std = standardize(&v).unwrap();
        prop_assert_eq!(standardize(std.entries()).unwrap(), std.clone());
        for (a, b) in v.iter().zip(std.entries()) {
            prop_assert_eq!(a.signum(), b.signum());
        }
        for (i, j) in (0..v.len()).flat_map(|i| (0..v.len()).map(move |j| (i, j))) {
            prop_assert_eq!(v[i].abs() < v[j].abs(), std.entries()[i].abs() < std.entries()[j].abs());
        }
    }

    #[test]
    fn prefixes_of_snakes_are_snakes(s in snake(25), cut in 0usize..=25) {
        let len = cut.min(s.len());
        let prefix = s.standardized_prefix(len);
        prop_assert_eq!(prefix.len(), len);
        prop_assert!(is_snake(prefix.as_signed_permutation()));
    }

    #[test]
    fn labeling_count_is_product_of_heights(steps in ballot_steps(40)) {
        let path = BallotPath::new(steps).unwrap();
        let want: BigUint = path.heights().iter().map(|&h| BigUint::from(h + 1)).product();
        prop_assert_eq!(path.labeling_count(), want);
    }

    #[test]
    fn text_forms_round_trip(p in labeled_path(30)) {
        let text = p.to_string();
        let (steps, labels) = text.split_once(' ').unwrap_or((text.as_str(), ""));
        let back = LabeledBallotPath::new(
            BallotPath::new(parse_steps(steps).unwrap()).unwrap(),
            parse_labels(labels).unwrap(),
        ).unwrap();
        prop_assert_eq!(&back, &p);
        let s = psi(&p).unwrap();
        prop_assert_eq!(s.to_string().parse::<Snake>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Snake>(&json).unwrap(), s);
    }

    #[test]
    fn level_codes_round_trip_through_dyck(raw in prop::collection::vec(0u32..4, 0..20)) {
        let mut values: Vec<u32> = Vec::with_capacity(raw.len());
        let mut prev = 0;
        for drop in raw {
            prev = prev + 1 - drop.min(prev);
            values.push(prev);
        }
        let code = LevelCode::new(values).unwrap();
        let dyck = code.to_dyck();
        prop_assert!(dyck.is_dyck());
        prop_assert_eq!(dyck.len(), 2 * code.len());
        prop_assert_eq!(LevelCode::from_dyck(&dyck).unwrap(), code);
    }

    #[test]
    fn non_snakes_are_rejected(v in super_alphabet(8)) {
        let perm = standardize(&v).unwrap();
        let accepted = Snake::try_from(perm.clone()).is_ok();
        prop_assert_eq!(accepted, is_snake(&perm));
    }
}
