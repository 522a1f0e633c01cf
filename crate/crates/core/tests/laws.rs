use bicyclic_ext::cli::{verify_outcome, EXIT_OK, EXIT_VIOLATION};
use bicyclic_ext::verify::{all_hold, SuiteConfig, Sweep, Verifier};
use bicyclic_ext::*;
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = Triple> {
    (0u64..1_000, 0u64..1_000, 0u64..=1).prop_map(|(i, j, f)| Triple::new(i, j, f))
}

fn monoid_part() -> impl Strategy<Value = MonoidPart> {
    prop_oneof![
        (1u64..20).prop_flat_map(|k| (Just(k), 0..k)).prop_map(|(k, p)| MonoidPart::Alpha { k, p }),
        (2u64..20).prop_flat_map(|k| (Just(k), 1..k)).prop_map(|(k, p)| MonoidPart::Beta { k, p }),
        (1u64..20).prop_map(|k| MonoidPart::Gamma { k }),
        (1u64..20).prop_map(|k| MonoidPart::Delta { k }),
        Just(MonoidPart::AnnUnit),
    ]
}

fn normal_form() -> impl Strategy<Value = EndoNormalForm> {
    (monoid_part(), 0u64..30).prop_map(|(m, n)| EndoNormalForm::new(m, n).unwrap())
}

proptest! {
    #[test]
    fn associativity_off_window(x in triple(), y in triple(), z in triple()) {
        let left = x.mul(y).unwrap().mul(z).unwrap();
        let right = x.mul(y.mul(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_forms_are_homomorphisms(e in normal_form(), x in triple(), y in triple()) {
        let lhs = e.apply(x.mul(y).unwrap()).unwrap();
        let rhs = e.apply(x).unwrap().mul(e.apply(y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_is_pointwise(f in normal_form(), g in normal_form(), x in triple()) {
        let h = compose(&f, &g).unwrap();
        prop_assert_eq!(h.apply(x).unwrap(), g.apply(f.apply(x).unwrap()).unwrap());
        prop_assert_eq!(Ok(h), endo::compose_pointwise(&f, &g));
    }

    #[test]
    fn factor_recovers_form(e in normal_form()) {
        prop_assert_eq!(factor(&e), Ok(e));
    }

    #[test]
    fn expression_text_round_trips(e in normal_form()) {
        let text = e.to_string();
        prop_assert_eq!(parse_endo_expression(&text), Ok(e));
    }

    #[test]
    fn element_text_round_trips(x in triple()) {
        let x = Element::from(x);
        prop_assert_eq!(x.to_string().parse::<Element>(), Ok(x));
    }

    #[test]
    fn pi_power_is_iterated_pi(x in triple(), n in 0u64..40) {
        let mut y = x;
        for _ in 0..n {
            y = apply_pi(y).unwrap();
        }
        prop_assert_eq!(apply_pi_power(x, n).unwrap(), y);
    }
}

// Broken products: each confuses the set component on one side of the
// j1 < i2 / j1 >= i2 boundary.

fn product_with(set: InductiveSet, i: u64, j: u64) -> Result<Triple> {
    match set {
        InductiveSet::Tail(f) => Ok(Triple::new(i, j, f)),
        InductiveSet::Empty => Err(Error::Overflow),
    }
}

fn mutant_boundary_orientation(x: Triple, y: Triple) -> Result<Triple> {
    if x.j < y.i {
        // uses the j1 > i2 orientation of the shift
        let set = shift_intersect(y.i as i64 - x.j as i64, y.set(), x.set());
        product_with(set, x.i + y.i - x.j, y.j)
    } else {
        x.mul(y)
    }
}

fn mutant_unshifted(x: Triple, y: Triple) -> Result<Triple> {
    let correct = x.mul(y)?;
    Ok(Triple::new(correct.i, correct.j, x.f.max(y.f)))
}

fn mutant_equal_case_drops_intersection(x: Triple, y: Triple) -> Result<Triple> {
    if x.j == y.i {
        Ok(Triple::new(x.i, y.j, y.f))
    } else {
        x.mul(y)
    }
}

#[test]
fn suite_passes_on_the_real_product() {
    let out = verify_outcome(&Verifier::default(), &SuiteConfig::default(), false);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
}

#[test]
fn suite_catches_product_mutants() {
    let small = SuiteConfig {
        triple_window: 4,
        map_window: 8,
        sweep: Sweep { max_k: 2, max_power: 2 },
        inductive_support: 8,
    };
    for (name, mutant) in [
        ("boundary orientation", mutant_boundary_orientation as fn(Triple, Triple) -> Result<Triple>),
        ("unshifted", mutant_unshifted),
        ("equal case", mutant_equal_case_drops_intersection),
    ] {
        let v = Verifier::with_product(mutant);
        let reports = v.suite(&small);
        assert!(!all_hold(&reports), "mutant {name} survived");
        let out = verify_outcome(&v, &small, true);
        assert_eq!(out.code, EXIT_VIOLATION, "mutant {name}");
    }
}

#[test]
fn general_family_with_zero() {
    let fam = Family::new([0, 1, 2], false).unwrap().with_empty();
    let x = fam.parse_element("(1,3,[2))").unwrap();
    assert_eq!(fam.multiply(x, Element::Zero), Ok(Element::Zero));
    assert_eq!(fam.multiply(x, x.inverse()).unwrap(), Element::triple(1, 1, 2));
    assert!(Verifier::default().check_associativity(4, &fam).holds());
}
