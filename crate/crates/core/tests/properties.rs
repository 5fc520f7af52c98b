use std::collections::{HashMap, HashSet};

use proptest::prelude::*;

use mvtool::decompose::{
    atoms_from_generators, decompose_product, is_perfect_element, product_reconstruction_check,
    quotient_by_boolean,
};
use mvtool::equivalence::{gamma, sigma};
use mvtool::sequent::{
    check_sequent, eval_term, parse_formula, parse_sequent, parse_term, CheckOptions, Formula, Scalar,
    Sequent, Signature, Term,
};
use mvtool::{parse_element, parse_group, parse_mv, LGroup, MvAlgebra, Structure, Value, Verdict};

fn b(t: Term) -> Box<Term> {
    Box::new(t)
}

fn var() -> impl Strategy<Value = Term> {
    prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(|v| Term::Var(v.into()))
}

fn mv_term(unit: bool) -> impl Strategy<Value = Term> {
    let leaf = if unit {
        prop_oneof![var(), Just(Term::Zero), Just(Term::One), Just(Term::Unit)].boxed()
    } else {
        prop_oneof![var(), Just(Term::Zero), Just(Term::One)].boxed()
    };
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Oplus(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Odot(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Inf(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Sup(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::D(b(p), b(q))),
            inner.clone().prop_map(|p| Term::Neg(b(p))),
            (1u64..4, inner.clone()).prop_map(|(n, p)| Term::Scalar(Scalar::Lit(n), b(p))),
            (inner, 1u64..4).prop_map(|(p, n)| Term::Power(b(p), Scalar::Lit(n))),
        ]
    })
}

fn group_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![var(), Just(Term::Zero), Just(Term::Unit)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Add(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Inf(b(p), b(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Term::Sup(b(p), b(q))),
            inner.clone().prop_map(|p| Term::Minus(b(p))),
            (1u64..4, inner).prop_map(|(n, p)| Term::Scalar(Scalar::Lit(n), b(p))),
        ]
    })
}

fn formula(term: BoxedStrategy<Term>) -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term.clone(), term.clone()).prop_map(|(s, t)| Formula::Eq(s, t)),
        (term.clone(), term).prop_map(|(s, t)| Formula::Leq(s, t)),
        Just(Formula::Top),
        Just(Formula::Bot),
    ];
    atom.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::And(Box::new(p), Box::new(q))),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Formula::Or(Box::new(p), Box::new(q))),
            inner.prop_map(|p| Formula::Exists("w".into(), Box::new(p))),
        ]
    })
}

fn chang_value() -> impl Strategy<Value = Value> {
    prop_oneof![(0u64..12).prop_map(Value::fin), (0u64..12).prop_map(Value::cofin)]
}

/// Direct recursive evaluation, independent of the compiled evaluator.
fn reference(a: &MvAlgebra, t: &Term, env: &HashMap<String, Value>) -> Value {
    let r = |t: &Term| reference(a, t, env);
    let lit = |s: &Scalar| match s {
        Scalar::Lit(n) => *n,
        Scalar::Index(_) => unreachable!(),
    };
    match t {
        Term::Var(v) => env[v].clone(),
        Term::Zero => a.zero(),
        Term::One => a.one(),
        Term::Oplus(p, q) => a.oplus(&r(p), &r(q)).unwrap(),
        Term::Odot(p, q) => a.odot(&r(p), &r(q)).unwrap(),
        Term::Inf(p, q) => a.inf(&r(p), &r(q)).unwrap(),
        Term::Sup(p, q) => a.sup(&r(p), &r(q)).unwrap(),
        Term::D(p, q) => a.dist(&r(p), &r(q)).unwrap(),
        Term::Neg(p) => a.neg(&r(p)).unwrap(),
        Term::Scalar(n, p) => a.scalar(lit(n), &r(p)).unwrap(),
        Term::Power(p, n) => a.power(&r(p), lit(n)).unwrap(),
        other => panic!("not an MV term: {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mv_terms_print_and_parse_back(t in mv_term(false)) {
        let printed = t.to_string();
        prop_assert_eq!(parse_term(&printed, Signature::Mv).unwrap(), t, "{}", printed);
    }

    #[test]
    fn sequents_with_constants_print_and_parse_back(s in mv_term(true), t in group_term()) {
        for consequent in [Formula::Leq(s.clone(), Term::One), Formula::Eq(t.clone(), Term::Zero)] {
            let seq = Sequent {
                context: vec!["x".into(), "y".into(), "z".into()],
                antecedent: Formula::Top,
                consequent,
                name: None,
            };
            let printed = seq.to_string();
            prop_assert_eq!(parse_sequent(&printed).unwrap(), seq, "{}", printed);
        }
    }

    #[test]
    fn formulas_print_and_parse_back(f in formula(mv_term(false).boxed())) {
        let printed = f.to_string();
        prop_assert_eq!(parse_formula(&printed).unwrap(), f, "{}", printed);
    }

    #[test]
    fn evaluation_is_compositional(
        t in mv_term(false),
        x in chang_value(),
        y in chang_value(),
        z in chang_value(),
    ) {
        let c = MvAlgebra::Chang;
        let env: HashMap<String, Value> =
            [("x", x), ("y", y), ("z", z)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        prop_assert_eq!(eval_term(&c, &t, &env).unwrap(), reference(&c, &t, &env));
    }

    #[test]
    fn counterexamples_persist_at_larger_bounds(
        s in mv_term(false),
        t in mv_term(false),
        bound in 1u64..4,
        extra in 1u64..4,
    ) {
        let a = MvAlgebra::Product(vec![MvAlgebra::Chang, MvAlgebra::B]);
        let seq = Sequent {
            context: vec!["x".into(), "y".into(), "z".into()],
            antecedent: Formula::Top,
            consequent: Formula::Eq(s, t),
            name: None,
        };
        let small = check_sequent(&a, &seq, &CheckOptions::new(bound)).unwrap();
        if small.verdict.is_counterexample() {
            let large = check_sequent(&a, &seq, &CheckOptions::new(bound + extra)).unwrap();
            prop_assert!(large.verdict.is_counterexample());
        }
    }

    #[test]
    fn atoms_partition_unity(
        gens in prop::collection::vec((chang_value(), chang_value()), 0..3),
    ) {
        let a = MvAlgebra::Product(vec![MvAlgebra::Chang, MvAlgebra::Chang]);
        // The first generator separates the two factors, so every factor is perfect.
        let separating = Value::tuple(vec![Value::fin(1), Value::cofin(1)]);
        let gens: Vec<Value> = std::iter::once(separating)
            .chain(gens.into_iter().map(|(p, q)| Value::tuple(vec![p, q])))
            .collect();
        let atoms = atoms_from_generators(&a, &gens).unwrap();
        prop_assert!(atoms.len() <= 1 << gens.len());
        let mut join = a.zero();
        for (i, x) in atoms.iter().enumerate() {
            prop_assert!(a.is_boolean(x).unwrap());
            for y in &atoms[i + 1..] {
                prop_assert_eq!(a.inf(x, y).unwrap(), a.zero());
            }
            join = a.sup(&join, x).unwrap();
        }
        prop_assert_eq!(join, a.one());
        let d = decompose_product(&a, &gens, 6).unwrap();
        prop_assert_eq!(d.factors.len(), 2);
        prop_assert!(product_reconstruction_check(&d, 3).unwrap().holds());
    }

    #[test]
    fn quotient_projection_is_a_homomorphism(
        x in chang_value(), y in chang_value(), p in chang_value(), q in chang_value(),
        k in 0usize..4,
    ) {
        let a = MvAlgebra::Product(vec![MvAlgebra::Chang, MvAlgebra::Chang]);
        let bits = [Value::fin(0), Value::cofin(0)];
        let kernel = Value::tuple(vec![bits[k & 1].clone(), bits[k >> 1].clone()]);
        let quot = quotient_by_boolean(&a, &kernel).unwrap();
        let (u, v) = (Value::tuple(vec![x, p]), Value::tuple(vec![y, q]));
        let pu = quot.project(&u).unwrap();
        let pv = quot.project(&v).unwrap();
        prop_assert_eq!(quot.project(&a.oplus(&u, &v).unwrap()).unwrap(), quot.algebra.oplus(&pu, &pv).unwrap());
        prop_assert_eq!(quot.project(&a.neg(&u).unwrap()).unwrap(), quot.algebra.neg(&pu).unwrap());
        prop_assert_eq!(quot.project(&quot.lift(&pu).unwrap()).unwrap(), pu);
    }
}

#[test]
fn perfect_elements_match_perfect_quotients() {
    for desc in ["Prod(C,C)", "Prod(C,C,B)", "Prod(C,Sigma(Z))", "C", "B"] {
        let a = parse_mv(desc).unwrap();
        for e in a.elements(6).unwrap() {
            if !a.is_boolean(&e).unwrap() {
                continue;
            }
            let q = quotient_by_boolean(&a, &a.neg(&e).unwrap()).unwrap();
            let perfect = !q.algebra.is_trivial() && q.algebra.check_perfect(6).unwrap().holds();
            assert_eq!(is_perfect_element(&a, &e, 6).unwrap(), perfect, "{e} in {desc}");
        }
    }
}

#[test]
fn sigma_tags_agree_with_radical_membership() {
    for g in ["Z", "Z^2", "Lex(Z,Z)"] {
        let a = sigma(&parse_group(g).unwrap());
        for x in a.elements(4).unwrap() {
            let rad = matches!(x, Value::Rad(_));
            assert_eq!(a.is_radical(&x).unwrap(), rad, "{x}");
            assert_eq!(a.is_coradical(&x).unwrap(), !rad, "{x}");
        }
    }
}

#[test]
fn gamma_of_lex_matches_sigma() {
    let g = LGroup::Zn(1);
    let lex = parse_group("Lex(Z,Z)").unwrap();
    let unit = parse_element(&Structure::Group(lex.clone()), "(1,0)").unwrap();
    let interval = gamma(&lex, &unit).unwrap();
    let s = sigma(&g);
    let bound = 5;
    let to_sigma = |x: &Value| match x {
        Value::Lex(h, t) if h.is_zero() => Value::Rad(t.clone()),
        Value::Lex(_, t) => Value::Corad(t.clone()),
        other => panic!("{other}"),
    };
    let mapped: HashSet<Value> = interval.elements(bound).unwrap().iter().map(to_sigma).collect();
    let expected: HashSet<Value> = s.elements(bound).unwrap().into_iter().collect();
    assert_eq!(mapped, expected);
}

#[test]
fn boolean_skeleton_of_chang() {
    let c = MvAlgebra::Chang;
    let booleans: Vec<Value> =
        c.elements(20).unwrap().into_iter().filter(|x| c.is_boolean(x).unwrap()).collect();
    assert_eq!(booleans, vec![Value::fin(0), Value::cofin(0)]);
}

#[test]
fn verdicts_are_monotone_on_registry_failures() {
    let a = parse_mv("Prod(C,C)").unwrap();
    let p3 = mvtool::sequent::lookup("P.3").unwrap();
    for bound in 1..6 {
        let r = check_sequent(&a, &p3, &CheckOptions::new(bound)).unwrap();
        assert!(matches!(r.verdict, Verdict::CounterExample(_)), "bound {bound}");
    }
}
