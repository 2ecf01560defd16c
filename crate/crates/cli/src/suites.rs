//! Seeded verification suites.
//!
//! Each suite states a property in words, hammers it with seeded trials
//! (full enumeration where the carrier is small enough), and reports one
//! tally line per field. Identical (suite, seed, trials, fields) calls give
//! byte-identical reports whether or not the trials fan out over threads:
//! trial t always draws from its own RNG stream.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use neutro_algebra::groupscan::{group_scan, GElem, GroupOp, SubgroupLabel};
use neutro_algebra::inner::InnerSpaceContext;
use neutro_algebra::nspace::{NFoldMap, NFoldVector, Part};
use neutro_algebra::scalar::SLOTS;
use neutro_algebra::text::{print_map, print_matrix, print_poly, print_scalar, print_vectors};
use neutro_algebra::{
    parse_field_tag, spectral, Base, FieldDescriptor, Flavor, NError, NMatrix, NNum, NPoly,
    Result, Slot,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::gen;
use crate::{run_ordered, Output};

enum TrialResult {
    Pass,
    /// A rejection the property calls for (dependent input, unordered base).
    Expected,
    Fail(String),
}

macro_rules! check {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return TrialResult::Fail(format!($($arg)+));
        }
    };
}

/// Unwrap a library call whose failure would itself refute the property.
macro_rules! step {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return TrialResult::Fail(format!("unexpected error {err}")),
        }
    };
}

struct Suite {
    name: &'static str,
    property: &'static str,
    defaults: &'static [&'static str],
    uses_fields: bool,
    run: fn(&mut ChaCha8Rng, FieldDescriptor) -> TrialResult,
}

const SUITES: &[Suite] = &[
    Suite {
        name: "ring-axioms",
        property: "a+bI scalars form a commutative unital ring and evaluation at \
                   both slots preserves sums and products",
        defaults: &["N(Z2)", "N(Z3)", "N(Q)"],
        uses_fields: true,
        run: ring_axioms_trial,
    },
    Suite {
        name: "split-commutation",
        property: "evaluation at each slot commutes with every scalar, polynomial, \
                   and matrix operation, and the slot pair recombines to the original",
        defaults: &["N(Z2)", "N(Z3)", "N(Z5)", "N(Q)"],
        uses_fields: true,
        run: split_commutation_trial,
    },
    Suite {
        name: "rank-nullity",
        property: "rank plus nullity equals the domain dimension in every component, \
                   in both slots, and kernel basis vectors map to zero",
        defaults: &["N(Z2)", "N(Z3)", "N(Q)"],
        uses_fields: true,
        run: rank_nullity_trial,
    },
    Suite {
        name: "cayley-hamilton",
        property: "every square matrix satisfies its characteristic polynomial and \
                   the minimal polynomial divides it in each slot",
        defaults: &["N(Z2)", "N(Z3)", "N(Z5)", "N(Q)"],
        uses_fields: true,
        run: cayley_hamilton_trial,
    },
    Suite {
        name: "dual-reconstruction",
        property: "dual functionals hit delta on their basis, vectors and functionals \
                   are recovered by reconstruction sums, annihilator dimensions \
                   complement the span, and transposing preserves rank",
        defaults: &["N(Z2)", "N(Z3)", "N(Q)"],
        uses_fields: true,
        run: dual_reconstruction_trial,
    },
    Suite {
        name: "gram-schmidt",
        property: "orthogonalization returns pairwise orthogonal vectors spanning \
                   every prefix, and rejects dependent input",
        defaults: &["N(Q)"],
        uses_fields: true,
        run: gram_schmidt_trial,
    },
    Suite {
        name: "bessel",
        property: "the coefficient sum against an orthogonal set never exceeds the \
                   squared norm, with equality exactly on the span",
        defaults: &["N(Q)"],
        uses_fields: true,
        run: bessel_trial,
    },
    Suite {
        name: "taxonomy",
        property: "additive scans of Z_n adjoined I form groups of order n squared \
                   with subgroups labeled by their real part; nonzero multiplicative \
                   scans fail on I",
        defaults: &[],
        uses_fields: false,
        run: taxonomy_trial,
    },
];

fn resolve_fields(spec: Option<&str>, defaults: &[&str]) -> Result<Vec<FieldDescriptor>> {
    match spec {
        Some(s) => s.split(',').map(|t| parse_field_tag(t.trim())).collect(),
        None => defaults.iter().map(|t| parse_field_tag(t)).collect(),
    }
}

/// All elements of a finite scalar ring, when checking every triple is
/// cheaper than sampling. Rationals and larger primes fall back to trials.
fn enumerate_field(field: FieldDescriptor) -> Option<Vec<NNum>> {
    let p = match field.base {
        Base::Rationals => return None,
        Base::Prime(p) => p,
    };
    let pairs: Vec<(i64, i64)> = match field.flavor {
        Flavor::Real => (0..p as i64).map(|a| (a, 0)).collect(),
        Flavor::PureNeutrosophic => (0..p as i64).map(|b| (0, b)).collect(),
        Flavor::FullNeutrosophic => (0..p as i64)
            .flat_map(|a| (0..p as i64).map(move |b| (a, b)))
            .collect(),
    };
    if pairs.len().pow(3) > 300_000 {
        return None;
    }
    Some(
        pairs
            .into_iter()
            .map(|(a, b)| NNum::from_i64(a, b, field).expect("flavor-conforming parts"))
            .collect(),
    )
}

fn stream(field_index: usize, trial: u64) -> u64 {
    (field_index as u64) << 32 | trial
}

struct FieldTally {
    pass: u64,
    expected: u64,
    fail: u64,
    exhaustive: bool,
    first_fail: Option<String>,
}

fn tally(results: Vec<TrialResult>, exhaustive: bool) -> FieldTally {
    let mut t = FieldTally { pass: 0, expected: 0, fail: 0, exhaustive, first_fail: None };
    for r in results {
        match r {
            TrialResult::Pass => t.pass += 1,
            TrialResult::Expected => t.expected += 1,
            TrialResult::Fail(doc) => {
                t.fail += 1;
                if t.first_fail.is_none() {
                    t.first_fail = Some(doc);
                }
            }
        }
    }
    t
}

pub fn verify(
    name: &str,
    seed: u64,
    trials: u64,
    fields: Option<&str>,
    parallel: bool,
) -> Result<Output> {
    let suite = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| NError::UnknownSuite(name.to_string()))?;

    let field_list = if suite.uses_fields {
        resolve_fields(fields, suite.defaults)?
    } else {
        Vec::new()
    };

    let mut out = format!("suite {}\n", suite.name);
    let _ = writeln!(out, "property {}", suite.property);
    let _ = writeln!(out, "seed {seed}");
    let _ = writeln!(out, "trials {trials}");
    if suite.uses_fields {
        let tags: Vec<String> = field_list.iter().map(|f| f.tag()).collect();
        let _ = writeln!(out, "fields {}", tags.join(","));
    } else {
        let _ = writeln!(out, "fields -");
    }

    let mut counterexample = None;
    let mut failed = false;

    let run_random = |fi: usize, field: FieldDescriptor| -> FieldTally {
        let results = run_ordered(parallel, trials as usize, |t| {
            let mut rng = gen::rng_for(seed, stream(fi, t as u64));
            (suite.run)(&mut rng, field)
        });
        tally(results, false)
    };

    if suite.uses_fields {
        for (fi, &field) in field_list.iter().enumerate() {
            let t = if suite.name == "ring-axioms" {
                match enumerate_field(field) {
                    Some(elems) => {
                        let e = elems.len();
                        let results = run_ordered(parallel, e * e * e, |idx| {
                            let (x, rest) = (&elems[idx / (e * e)], idx % (e * e));
                            let (y, z) = (&elems[rest / e], &elems[rest % e]);
                            match ring_axioms_triple(x, y, z) {
                                None => TrialResult::Pass,
                                Some(doc) => TrialResult::Fail(doc),
                            }
                        });
                        tally(results, true)
                    }
                    None => run_random(fi, field),
                }
            } else {
                run_random(fi, field)
            };
            let mode = if t.exhaustive { "exhaustive, " } else { "" };
            let _ = writeln!(
                out,
                "{}: {}{} pass, {} expected-error, {} fail",
                field.tag(),
                mode,
                t.pass,
                t.expected,
                t.fail
            );
            if t.fail > 0 {
                failed = true;
                if counterexample.is_none() {
                    counterexample = t.first_fail;
                }
            }
        }
    } else {
        let t = run_random(0, FieldDescriptor::rationals(Flavor::FullNeutrosophic));
        let _ = writeln!(
            out,
            "scan: {} pass, {} expected-error, {} fail",
            t.pass, t.expected, t.fail
        );
        if t.fail > 0 {
            failed = true;
            counterexample = t.first_fail;
        }
    }

    if let Some(doc) = counterexample {
        let _ = writeln!(out, "counterexample {doc}");
    }
    let _ = writeln!(out, "{}", if failed { "FAIL" } else { "PASS" });
    Ok(Output { text: out, failed })
}

// ---------------------------------------------------------------------
// trial bodies

fn ring_axioms_triple(x: &NNum, y: &NNum, z: &NNum) -> Option<String> {
    let field = x.field;
    let ctx = format!(
        "x={} y={} z={}",
        print_scalar(x),
        print_scalar(y),
        print_scalar(z)
    );
    let fail = |law: &str| Some(format!("law={law} {ctx}"));
    let add = |a: &NNum, b: &NNum| a.add(b).expect("one common field");
    let mul = |a: &NNum, b: &NNum| a.mul(b).expect("one common field");

    let zero = NNum::zero(field);
    let one = NNum::one(field);
    if add(x, y) != add(y, x) {
        return fail("add-commutative");
    }
    if add(&add(x, y), z) != add(x, &add(y, z)) {
        return fail("add-associative");
    }
    if add(x, &zero) != *x {
        return fail("add-identity");
    }
    if add(x, &x.neg()) != zero {
        return fail("add-inverse");
    }
    if mul(x, y) != mul(y, x) {
        return fail("mul-commutative");
    }
    if mul(&mul(x, y), z) != mul(x, &mul(y, z)) {
        return fail("mul-associative");
    }
    if mul(x, &one) != *x {
        return fail("mul-identity");
    }
    if mul(x, &add(y, z)) != add(&mul(x, y), &mul(x, z)) {
        return fail("distributive");
    }
    if let Ok(i) = NNum::i(field) {
        if mul(&i, &i) != i {
            return fail("indeterminacy-idempotent");
        }
    }
    for s in SLOTS {
        if add(x, y).eval(s) != x.eval(s).add(&y.eval(s)) {
            return fail("slot-additive");
        }
        if mul(x, y).eval(s) != x.eval(s).mul(&y.eval(s)) {
            return fail("slot-multiplicative");
        }
    }
    let back = NNum::recombine(&x.eval(Slot::At0), &x.eval(Slot::At1), field)
        .expect("slot values recombine inside the flavor");
    if back != *x {
        return fail("recombine");
    }
    None
}

fn ring_axioms_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    let x = gen::scalar(rng, field);
    let y = gen::scalar(rng, field);
    let z = gen::scalar(rng, field);
    match ring_axioms_triple(&x, &y, &z) {
        None => TrialResult::Pass,
        Some(doc) => TrialResult::Fail(doc),
    }
}

fn split_commutation_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    // scalars
    let x = gen::scalar(rng, field);
    let y = gen::scalar(rng, field);
    for s in SLOTS {
        check!(
            step!(x.add(&y)).eval(s) == x.eval(s).add(&y.eval(s)),
            "op=scalar-add x={} y={}",
            print_scalar(&x),
            print_scalar(&y)
        );
        check!(
            step!(x.mul(&y)).eval(s) == x.eval(s).mul(&y.eval(s)),
            "op=scalar-mul x={} y={}",
            print_scalar(&x),
            print_scalar(&y)
        );
        check!(
            x.neg().eval(s) == x.eval(s).neg(),
            "op=scalar-neg x={}",
            print_scalar(&x)
        );
    }
    if x.is_unit() {
        let xi = step!(x.inverse());
        for &s in slots_for(field.flavor) {
            check!(
                xi.eval(s) == step!(x.eval(s).inv()),
                "op=scalar-inverse x={}",
                print_scalar(&x)
            );
        }
    }
    check!(
        step!(NNum::recombine(&x.eval(Slot::At0), &x.eval(Slot::At1), field)) == x,
        "op=scalar-recombine x={}",
        print_scalar(&x)
    );

    // polynomials
    let p = gen::poly(rng, field, 3);
    let q = gen::poly(rng, field, 3);
    for s in SLOTS {
        check!(
            step!(p.add(&q)).eval_slot(s) == p.eval_slot(s).add(&q.eval_slot(s)),
            "op=poly-add p={} q={}",
            print_poly(&p),
            print_poly(&q)
        );
        check!(
            step!(p.mul(&q)).eval_slot(s) == p.eval_slot(s).mul(&q.eval_slot(s)),
            "op=poly-mul p={} q={}",
            print_poly(&p),
            print_poly(&q)
        );
        check!(
            step!(p.eval(&x)).eval(s) == p.eval_slot(s).eval(&x.eval(s)),
            "op=poly-eval p={} x={}",
            print_poly(&p),
            print_scalar(&x)
        );
    }
    check!(
        step!(NPoly::recombine(&p.eval_slot(Slot::At0), &p.eval_slot(Slot::At1), field)) == p,
        "op=poly-recombine p={}",
        print_poly(&p)
    );

    // matrices
    let a = gen::matrix(rng, field, 2);
    let b = gen::matrix(rng, field, 2);
    for s in SLOTS {
        check!(
            step!(a.add(&b)).eval_slot(s) == a.eval_slot(s).add(&b.eval_slot(s)),
            "op=matrix-add a={} b={}",
            print_matrix(&a),
            print_matrix(&b)
        );
        check!(
            step!(a.mul(&b)).eval_slot(s) == a.eval_slot(s).mul(&b.eval_slot(s)),
            "op=matrix-mul a={} b={}",
            print_matrix(&a),
            print_matrix(&b)
        );
        check!(
            step!(a.det()).eval(s) == a.eval_slot(s).det(),
            "op=matrix-det a={}",
            print_matrix(&a)
        );
    }
    for &s in slots_for(field.flavor) {
        check!(
            step!(a.charpoly()).eval_slot(s) == a.eval_slot(s).charpoly(),
            "op=matrix-charpoly a={}",
            print_matrix(&a)
        );
    }
    if let Ok(inv) = a.inverse() {
        for &s in slots_for(field.flavor) {
            let slot_inv = match a.eval_slot(s).inverse() {
                Some(m) => m,
                None => {
                    return TrialResult::Fail(format!(
                        "op=matrix-inverse a={} invertible as a whole, singular at a slot",
                        print_matrix(&a)
                    ))
                }
            };
            check!(
                inv.eval_slot(s) == slot_inv,
                "op=matrix-inverse a={}",
                print_matrix(&a)
            );
        }
    }
    if field.flavor == Flavor::FullNeutrosophic {
        let mp = step!(spectral::minpoly(&a));
        if mp.principal {
            for &s in slots_for(field.flavor) {
                check!(
                    mp.polynomial.eval_slot(s) == a.eval_slot(s).minpoly(),
                    "op=matrix-minpoly a={}",
                    print_matrix(&a)
                );
            }
        }
    }
    check!(
        step!(NMatrix::recombine(&a.eval_slot(Slot::At0), &a.eval_slot(Slot::At1), field)) == a,
        "op=matrix-recombine a={}",
        print_matrix(&a)
    );
    TrialResult::Pass
}

/// Slots that carry information for the flavor: both for full scalars, the
/// chart slot alone for pure and real ones (the other is identically zero
/// or redundant, so slot-level inverses are not defined there).
fn slots_for(flavor: Flavor) -> &'static [Slot] {
    match flavor {
        Flavor::FullNeutrosophic => &[Slot::At0, Slot::At1],
        Flavor::PureNeutrosophic | Flavor::Real => &[Slot::At1],
    }
}

fn rank_nullity_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    // two action regimes: the ring acting on itself, or the real subfield
    // acting on neutrosophic coordinates
    let real_scalars = field.flavor == Flavor::FullNeutrosophic && rng.random_bool(0.5);
    let scalars = if real_scalars {
        FieldDescriptor { base: field.base, flavor: Flavor::Real }
    } else {
        field
    };
    let fold = rng.random_range(1..=2usize);
    let make_space = |dims: &[usize]| {
        let nf = neutro_algebra::NFoldField::type_i(scalars, dims.len()).expect("fold >= 1");
        let ambients = dims
            .iter()
            .map(|&d| neutro_algebra::ComponentAmbient {
                shape: neutro_algebra::Shape::Tuple(d),
                entries: field,
            })
            .collect();
        neutro_algebra::NFoldSpace::new(nf, ambients).expect("tuple ambients")
    };
    let dom_dims: Vec<usize> = (0..fold).map(|_| rng.random_range(1..=3)).collect();
    let cod_dims: Vec<usize> = (0..fold).map(|_| rng.random_range(1..=3)).collect();
    let domain = make_space(&dom_dims);
    let codomain = make_space(&cod_dims);
    let assign: Vec<usize> = if fold == 2 && rng.random_bool(0.5) {
        vec![1, 0]
    } else {
        (0..fold).collect()
    };
    let mats: Vec<NMatrix> = (0..fold)
        .map(|i| {
            let rows = codomain.comp_dim(assign[i]).expect("tuple dimension");
            let cols = domain.comp_dim(i).expect("tuple dimension");
            gen::rect_matrix(rng, scalars, rows, cols)
        })
        .collect();
    let map = step!(NFoldMap::new(domain.clone(), codomain, assign, mats));

    let rn = step!(map.rank_nullity());
    for (i, r) in rn.iter().enumerate() {
        let dim = step!(domain.comp_dim(i));
        check!(
            r.rank.0 + r.nullity.0 == dim && r.rank.1 + r.nullity.1 == dim,
            "map={} component={} rank=({},{}) nullity=({},{}) dim={}",
            print_map(&map),
            i + 1,
            r.rank.0,
            r.rank.1,
            r.nullity.0,
            r.nullity.1,
            dim
        );
    }

    let kernels = step!(map.kernel_basis());
    for (i, k) in kernels.iter().enumerate() {
        check!(
            k.slot_nullity == rn[i].nullity,
            "map={} component={} kernel count disagrees with nullity",
            print_map(&map),
            i + 1
        );
        if let Some(basis) = &k.basis {
            for part in basis {
                let mut v = NFoldVector::zero(&domain);
                v.parts[i] = part.clone();
                let image = step!(map.apply(&v));
                check!(
                    image.is_zero(),
                    "map={} component={} kernel vector survives the map",
                    print_map(&map),
                    i + 1
                );
            }
        }
    }
    TrialResult::Pass
}

fn cayley_hamilton_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    let n = rng.random_range(2..=4);
    let a = gen::matrix(rng, field, n);
    check!(
        step!(spectral::cayley_hamilton_check(&a)),
        "matrix={} does not annihilate its characteristic polynomial",
        print_matrix(&a)
    );
    let mp = step!(spectral::minpoly(&a));
    for (s, kp) in [(Slot::At0, &mp.slot_minpolys.0), (Slot::At1, &mp.slot_minpolys.1)] {
        let cp = a.eval_slot(s).charpoly();
        check!(
            kp.divides(&cp),
            "matrix={} slot minimal polynomial {} does not divide {}",
            print_matrix(&a),
            kp,
            cp
        );
    }
    TrialResult::Pass
}

fn dual_reconstruction_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    let n = rng.random_range(2..=3);
    let space = gen::tuple_space(field, field, n);
    let p = gen::invertible_matrix(rng, field, n);
    let basis: Vec<Part> = (0..n)
        .map(|j| Part::Tuple((0..n).map(|r| p.get(r, j).clone()).collect()))
        .collect();
    let funcs = step!(space.dual_basis(&[basis.clone()]));
    let rows = &funcs[0].rows;

    let one = NNum::one(field);
    let zero = NNum::zero(field);
    for i in 0..n {
        for j in 0..n {
            let v = step!(space.functional_apply(0, &rows[i], &basis[j]));
            let want = if i == j { &one } else { &zero };
            check!(
                v == *want,
                "basis={} functional {} on vector {} gave {}",
                print_matrix(&p),
                i + 1,
                j + 1,
                print_scalar(&v)
            );
        }
    }

    // a vector is the coefficient sum of its functional values
    let target = gen::tuple_part(rng, &space, 0);
    let coeffs: Vec<NNum> = {
        let mut cs = Vec::with_capacity(n);
        for row in rows {
            cs.push(step!(space.functional_apply(0, row, &target)));
        }
        cs
    };
    let target_entries = target.entries();
    for e in 0..n {
        let mut acc = NNum::zero(field);
        for j in 0..n {
            acc = step!(acc.add(&step!(coeffs[j].mul(p.get(e, j)))));
        }
        check!(
            acc == target_entries[e],
            "basis={} vector {} not recovered by reconstruction",
            print_matrix(&p),
            print_part_tuple(&target)
        );
    }

    // a functional is the coefficient sum of its basis values
    let g: Vec<NNum> = (0..n).map(|_| gen::scalar(rng, field)).collect();
    let mut gvals = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = NNum::zero(field);
        for e in 0..n {
            acc = step!(acc.add(&step!(g[e].mul(p.get(e, j)))));
        }
        gvals.push(acc);
    }
    for e in 0..n {
        let mut acc = NNum::zero(field);
        for j in 0..n {
            acc = step!(acc.add(&step!(gvals[j].mul(&rows[j][e]))));
        }
        check!(
            acc == g[e],
            "basis={} functional not recovered by reconstruction",
            print_matrix(&p)
        );
    }

    // annihilator dimensions complement the span, and its rows kill it
    let k = rng.random_range(1..n.max(2));
    let gens: Vec<NFoldVector> = (0..k).map(|_| gen::tuple_vector(rng, &space)).collect();
    let ann = step!(space.annihilator(&gens));
    let comp = &ann[0];
    check!(
        comp.dim_w.0 + comp.dim_ann.0 == n && comp.dim_w.1 + comp.dim_ann.1 == n,
        "generators={} dimW=({},{}) dimAnn=({},{}) do not sum to {}",
        print_vectors(&space, &gens),
        comp.dim_w.0,
        comp.dim_w.1,
        comp.dim_ann.0,
        comp.dim_ann.1,
        n
    );
    if let Some(rows) = &comp.functionals {
        for row in rows {
            for gvec in &gens {
                let v = step!(space.functional_apply(0, row, &gvec.parts[0]));
                check!(
                    v.is_zero(),
                    "generators={} annihilator row fails to vanish",
                    print_vectors(&space, &gens)
                );
            }
        }
    }

    // transpose preserves rank slot for slot
    let m = gen::matrix(rng, field, n);
    let map = step!(NFoldMap::new(space.clone(), space.clone(), vec![0], vec![m]));
    let t = step!(map.transpose_map());
    let (mr, tr) = (step!(map.rank_nullity()), step!(t.rank_nullity()));
    check!(
        mr[0].rank == tr[0].rank,
        "map={} transpose rank {:?} differs from {:?}",
        print_map(&map),
        tr[0].rank,
        mr[0].rank
    );
    TrialResult::Pass
}

fn print_part_tuple(part: &Part) -> String {
    neutro_algebra::text::print_part(part)
}

fn gram_schmidt_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    let dim = rng.random_range(2..=4);
    let k = rng.random_range(2..=dim);
    let space = gen::tuple_space(field, field, dim);
    let mut vecs: Vec<NFoldVector> = (0..k).map(|_| gen::tuple_vector(rng, &space)).collect();
    if rng.random_range(0..5) == 0 {
        // plant a dependency: the last vector becomes a multiple of the first
        let c = gen::scalar(rng, field);
        vecs[k - 1] = step!(vecs[0].scale(&[c]));
    }
    let independent = step!(space.independent(&vecs)).independent;
    let ctx = step!(InnerSpaceContext::new(space.clone()));
    let ortho = match ctx.gram_schmidt(&vecs) {
        Err(NError::DependentInput) => {
            check!(
                !independent,
                "rejected an independent list {}",
                print_vectors(&space, &vecs)
            );
            return TrialResult::Expected;
        }
        Err(NError::NonInvertibleNorm(_)) if field.base != Base::Rationals => {
            return TrialResult::Expected;
        }
        Err(e) => return TrialResult::Fail(format!("unexpected error {e}")),
        Ok(v) => v,
    };
    check!(
        independent,
        "accepted a dependent list {}",
        print_vectors(&space, &vecs)
    );
    for i in 0..ortho.len() {
        for j in i + 1..ortho.len() {
            check!(
                step!(ctx.orthogonal(&ortho[i], &ortho[j])),
                "outputs {} not pairwise orthogonal",
                print_vectors(&space, &ortho)
            );
        }
    }
    for m in 1..=ortho.len() {
        let before = step!(space.nbasis(&vecs[..m])).dims;
        let mut joint = vecs[..m].to_vec();
        joint.extend_from_slice(&ortho[..m]);
        let with_ortho = step!(space.nbasis(&joint)).dims;
        check!(
            before == with_ortho,
            "inputs {} and outputs {} span different prefixes at {}",
            print_vectors(&space, &vecs),
            print_vectors(&space, &ortho),
            m
        );
    }
    TrialResult::Pass
}

fn bessel_trial(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> TrialResult {
    let dim = rng.random_range(2..=4);
    let k = rng.random_range(1..dim);
    let space = gen::tuple_space(field, field, dim);
    let ctx = step!(InnerSpaceContext::new(space.clone()));
    let raw: Vec<NFoldVector> = (0..k).map(|_| gen::tuple_vector(rng, &space)).collect();
    let set = match ctx.gram_schmidt(&raw) {
        Err(NError::DependentInput) => return TrialResult::Expected,
        Err(NError::NonInvertibleNorm(_)) if field.base != Base::Rationals => {
            return TrialResult::Expected;
        }
        Err(e) => return TrialResult::Fail(format!("unexpected error {e}")),
        Ok(v) => v,
    };
    let beta = if rng.random_bool(0.5) {
        let mut acc = NFoldVector::zero(&space);
        for v in &set {
            acc = step!(acc.add(&step!(v.scale(&[gen::scalar(rng, field)]))));
        }
        acc
    } else {
        gen::tuple_vector(rng, &space)
    };
    // membership decided independently, by span dimensions
    let member = {
        let alone = step!(space.nbasis(&set)).dims;
        let mut joint = set.clone();
        joint.push(beta.clone());
        step!(space.nbasis(&joint)).dims == alone
    };
    let rep = match ctx.bessel_check(&beta, &set) {
        Err(NError::UnorderedField) if field.base != Base::Rationals => {
            return TrialResult::Expected;
        }
        Err(e) => return TrialResult::Fail(format!("unexpected error {e}")),
        Ok(r) => r,
    };
    check!(
        rep.holds,
        "beta={} set={} coefficient sum exceeds the squared norm",
        print_vectors(&space, &[beta.clone()]),
        print_vectors(&space, &set)
    );
    check!(
        rep.equality == member,
        "beta={} set={} equality={} but membership={}",
        print_vectors(&space, &[beta.clone()]),
        print_vectors(&space, &set),
        rep.equality,
        member
    );
    for i in 0..space.fold() {
        let diff = step!(rep.rhs[i].sub(&rep.lhs[i]));
        for s in SLOTS {
            check!(
                diff.eval(s).is_nonnegative() == Some(true),
                "beta={} set={} slack not nonnegative in a slot",
                print_vectors(&space, &[beta.clone()]),
                print_vectors(&space, &set)
            );
        }
    }
    TrialResult::Pass
}

fn members_doc(members: &[GElem]) -> String {
    let names: Vec<String> = members.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", names.join(", "))
}

fn taxonomy_trial(rng: &mut ChaCha8Rng, _field: FieldDescriptor) -> TrialResult {
    let n = rng.random_range(2..=10u64);
    let rep = step!(group_scan(n, GroupOp::AdditiveModN));
    check!(
        rep.is_group && rep.order == n * n && rep.failure_witness.is_none(),
        "modulus {n} additive scan is not a group of order {}",
        n * n
    );
    for (members, label) in &rep.subgroups {
        // relabel from the definitions: the real part of a subgroup decides
        let has_i = members.iter().any(|g| g.b != 0);
        let nontrivial_real = members.iter().any(|g| g.b == 0 && g.a != 0);
        let want = if !has_i {
            SubgroupLabel::RealSubgroup
        } else if nontrivial_real {
            SubgroupLabel::NeutrosophicSubgroup
        } else {
            SubgroupLabel::PseudoNeutrosophicSubgroup
        };
        check!(
            *label == want,
            "modulus {n} subgroup {} labeled {label} expected {want}",
            members_doc(members)
        );
        if n <= 6 {
            // closure and identity by brute force while the tables are small
            let set: BTreeSet<(u64, u64)> = members.iter().map(|g| (g.a, g.b)).collect();
            check!(
                set.contains(&(0, 0)),
                "modulus {n} subgroup {} lacks the identity",
                members_doc(members)
            );
            for x in members {
                for y in members {
                    check!(
                        set.contains(&((x.a + y.a) % n, (x.b + y.b) % n)),
                        "modulus {n} subgroup {} is not closed",
                        members_doc(members)
                    );
                }
            }
        }
    }

    let p = [2u64, 3, 5, 7, 11][rng.random_range(0..5usize)];
    let mrep = step!(group_scan(p, GroupOp::MultiplicativeNonzeroModN));
    check!(
        !mrep.is_group
            && mrep.failure_reason.as_deref() == Some("I has no inverse")
            && mrep.failure_witness == Some((GElem { a: 0, b: 1 }, GElem { a: 1, b: 0 })),
        "modulus {p} multiplicative scan should fail on I with witness (I, 1)"
    );
    TrialResult::Pass
}
