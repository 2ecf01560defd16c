//! Seeded generators for the verification suites.
//!
//! Every trial owns its own stream of a counter-based RNG, so trial `t` sees
//! the same draws whether trials run serially or fan out over threads.

use neutro_algebra::nspace::{ComponentAmbient, NFoldField, NFoldSpace, NFoldVector, Part, Shape};
use neutro_algebra::{Base, BaseElem, FieldDescriptor, Flavor, NMatrix, NNum, NPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn base_elem(rng: &mut ChaCha8Rng, base: Base) -> BaseElem {
    let raw = match base {
        Base::Rationals => rng.random_range(-4i64..=4),
        Base::Prime(p) => rng.random_range(0..p) as i64,
    };
    BaseElem::from_i64(raw, base)
}

/// Random scalar whose parts conform to the field's flavor.
pub fn scalar(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> NNum {
    let zero = BaseElem::from_i64(0, field.base);
    let a = base_elem(rng, field.base);
    let b = base_elem(rng, field.base);
    let (a, b) = match field.flavor {
        Flavor::Real => (a, zero),
        Flavor::PureNeutrosophic => (zero, b),
        Flavor::FullNeutrosophic => (a, b),
    };
    NNum::from_parts(a, b, field).expect("flavor-conforming parts")
}

pub fn poly(rng: &mut ChaCha8Rng, field: FieldDescriptor, max_deg: usize) -> NPoly {
    let deg = rng.random_range(0..=max_deg);
    let coeffs: Vec<NNum> = (0..=deg).map(|_| scalar(rng, field)).collect();
    NPoly::new(coeffs, field).expect("coefficients over one field")
}

pub fn matrix(rng: &mut ChaCha8Rng, field: FieldDescriptor, n: usize) -> NMatrix {
    let entries: Vec<NNum> = (0..n * n).map(|_| scalar(rng, field)).collect();
    NMatrix::new(n, n, entries, field).expect("square shape")
}

pub fn rect_matrix(
    rng: &mut ChaCha8Rng,
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
) -> NMatrix {
    let entries: Vec<NNum> = (0..rows * cols).map(|_| scalar(rng, field)).collect();
    NMatrix::new(rows, cols, entries, field).expect("rectangular shape")
}

pub fn invertible_matrix(rng: &mut ChaCha8Rng, field: FieldDescriptor, n: usize) -> NMatrix {
    loop {
        let m = matrix(rng, field, n);
        if m.det().expect("square matrix").is_unit() {
            return m;
        }
    }
}

/// Single-component tuple space: `scalars` acting on tuples with entries in
/// `entries`. Passing the same field twice gives the self-action regime;
/// passing the real part as scalars gives the real-axes regime.
pub fn tuple_space(scalars: FieldDescriptor, entries: FieldDescriptor, dim: usize) -> NFoldSpace {
    let field = NFoldField::type_i(scalars, 1).expect("fold 1");
    let ambient = ComponentAmbient { shape: Shape::Tuple(dim), entries };
    NFoldSpace::new(field, vec![ambient]).expect("tuple ambient")
}

pub fn tuple_part(rng: &mut ChaCha8Rng, space: &NFoldSpace, comp: usize) -> Part {
    let ambient = space.ambient(comp);
    let dim = match ambient.shape {
        Shape::Tuple(n) => n,
        _ => unreachable!("tuple ambient expected"),
    };
    Part::Tuple((0..dim).map(|_| scalar(rng, ambient.entries)).collect())
}

pub fn tuple_vector(rng: &mut ChaCha8Rng, space: &NFoldSpace) -> NFoldVector {
    let parts: Vec<Part> = (0..space.fold()).map(|i| tuple_part(rng, space, i)).collect();
    NFoldVector::new(space.clone(), parts).expect("parts fit ambients")
}
