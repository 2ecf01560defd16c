//! Handlers for the direct compute subcommands.
//!
//! Every handler reads one or more input documents (inline or from a file),
//! runs the corresponding library routine, and renders the result in the
//! same document grammar the parsers accept, so outputs can be fed back in.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use neutro_algebra::nspace::{ComponentDim, ComponentLabel, NFoldVector, Part};
use neutro_algebra::text::{
    parse_map, parse_matrix, parse_scalar, parse_scalar_with, parse_tuple_with, parse_vectors,
    print_matrix, print_part, print_poly, print_scalar, print_tuple, print_vectors,
};
use neutro_algebra::{groupscan, inner::InnerSpaceContext, spectral, NError, NNum, Result};

use crate::{DecomposeKind, Output, ScanOp};

/// Inline document or a path to one. Unreadable files surface as parse
/// errors so the exit code stays in the parse class.
pub fn input_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).map_err(|e| NError::ParseError {
            line: 1,
            col: 1,
            expected: format!("a readable input file ({e})"),
        })
    } else {
        Ok(arg.to_string())
    }
}

/// Roots render as a brace set in the library's deterministic order.
pub fn set_string(xs: &[NNum]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn annihilator_text(r: &spectral::AnnihilatorResult) -> String {
    let mut out = format!("{}\n", print_poly(&r.polynomial));
    if !r.principal {
        out.push_str("flag NonPrincipalMinPoly\n");
    }
    out
}

pub fn charpoly(arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    Ok(Output::ok(format!("{}\n", print_poly(&m.charpoly()?))))
}

pub fn minpoly(arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    Ok(Output::ok(annihilator_text(&spectral::minpoly(&m)?)))
}

pub fn det(arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    Ok(Output::ok(format!("{}\n", print_scalar(&m.det()?))))
}

pub fn inverse(arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    Ok(Output::ok(format!("{}\n", print_matrix(&m.inverse()?))))
}

pub fn spectrum(arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    let rep = spectral::spectrum(&m)?;
    Ok(Output::ok(format!(
        "charpoly {}\nroots {}\ncomplete {}\n",
        print_poly(&rep.charpoly),
        set_string(&rep.roots),
        rep.complete
    )))
}

pub fn eigvecs(matrix_arg: &str, value_arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(matrix_arg)?)?;
    let c = if value_arg.contains('@') {
        let c = parse_scalar(value_arg)?;
        if c.field != m.field() {
            return Err(NError::FieldMismatch);
        }
        c
    } else {
        parse_scalar_with(value_arg, m.field())?
    };
    let vecs = spectral::eigenvectors(&m, &c)?;
    let mut out = String::new();
    for v in &vecs {
        let _ = writeln!(out, "{}", print_tuple(v));
    }
    Ok(Output::ok(out))
}

pub fn kernel(arg: &str) -> Result<Output> {
    let map = parse_map(&input_text(arg)?)?;
    let comps = map.kernel_basis()?;
    let mut out = String::new();
    for (i, k) in comps.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {} nullity=({},{})",
            i + 1,
            k.slot_nullity.0,
            k.slot_nullity.1
        );
        if let Some(flag) = &k.flag {
            let _ = writeln!(out, "  flag {flag}");
        }
        if let Some(basis) = &k.basis {
            for part in basis {
                let _ = writeln!(out, "  {}", print_part(part));
            }
        }
    }
    Ok(Output::ok(out))
}

pub fn ranknullity(arg: &str) -> Result<Output> {
    let map = parse_map(&input_text(arg)?)?;
    let comps = map.rank_nullity()?;
    let mut out = String::new();
    for (i, r) in comps.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {} rank=({},{}) nullity=({},{}) uniform={}",
            i + 1,
            r.rank.0,
            r.rank.1,
            r.nullity.0,
            r.nullity.1,
            r.uniform
        );
    }
    Ok(Output::ok(out))
}

pub fn basis(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let nb = space.nbasis(&vectors)?;
    let mut out = String::new();
    for i in 0..space.fold() {
        match nb.dims[i] {
            ComponentDim::Finite(d) => {
                let _ = writeln!(out, "component {} dim={}", i + 1, d);
            }
            ComponentDim::SlotRankMismatch(a, b) => {
                let _ = writeln!(out, "component {} dim=slot-mismatch({},{})", i + 1, a, b);
            }
        }
        if let Some(parts) = &nb.per_component[i] {
            for part in parts {
                let _ = writeln!(out, "  {}", print_part(part));
            }
        }
    }
    Ok(Output::ok(out))
}

/// The i-th parts of the listed vectors must form a basis of component i.
fn component_basis(space_fold: usize, vectors: &[NFoldVector]) -> Vec<Vec<Part>> {
    (0..space_fold)
        .map(|i| vectors.iter().map(|v| v.parts[i].clone()).collect())
        .collect()
}

pub fn dualbasis(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let basis = component_basis(space.fold(), &vectors);
    let funcs = space.dual_basis(&basis)?;
    let mut out = String::new();
    for (i, comp) in funcs.iter().enumerate() {
        let _ = writeln!(out, "component {}", i + 1);
        for row in &comp.rows {
            let _ = writeln!(out, "  functional {}", print_tuple(row));
        }
    }
    Ok(Output::ok(out))
}

pub fn annihilator(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let comps = space.annihilator(&vectors)?;
    let mut out = String::new();
    for (i, comp) in comps.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {} dimW=({},{}) dimAnn=({},{})",
            i + 1,
            comp.dim_w.0,
            comp.dim_w.1,
            comp.dim_ann.0,
            comp.dim_ann.1
        );
        if let Some(flag) = &comp.flag {
            let _ = writeln!(out, "  flag {flag}");
        }
        if let Some(rows) = &comp.functionals {
            for row in rows {
                let _ = writeln!(out, "  functional {}", print_tuple(row));
            }
        }
    }
    Ok(Output::ok(out))
}

pub fn gramschmidt(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let ctx = InnerSpaceContext::new(space.clone())?;
    let ortho = ctx.gram_schmidt(&vectors)?;
    Ok(Output::ok(format!("{}\n", print_vectors(&space, &ortho))))
}

/// First listed vector is the target, the rest are the orthogonal set.
fn split_target(vectors: &[NFoldVector]) -> Result<(&NFoldVector, &[NFoldVector])> {
    match vectors.split_first() {
        Some(split) => Ok(split),
        None => Err(NError::ParseError {
            line: 1,
            col: 1,
            expected: "a target vector followed by the spanning set".into(),
        }),
    }
}

pub fn project(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let (beta, set) = split_target(&vectors)?;
    let ctx = InnerSpaceContext::new(space.clone())?;
    let approx = ctx.best_approx(beta, set)?;
    Ok(Output::ok(format!("{}\n", print_vectors(&space, &[approx]))))
}

pub fn complement(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let ctx = InnerSpaceContext::new(space.clone())?;
    let comp = ctx.orth_complement(&vectors)?;
    Ok(Output::ok(format!("{}\n", print_vectors(&space, &comp))))
}

pub fn bessel(arg: &str) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let (beta, set) = split_target(&vectors)?;
    let ctx = InnerSpaceContext::new(space)?;
    let rep = ctx.bessel_check(beta, set)?;
    Ok(Output::ok(format!(
        "lhs {}\nrhs {}\nholds {}\nequality {}\n",
        print_tuple(&rep.lhs),
        print_tuple(&rep.rhs),
        rep.holds,
        rep.equality
    )))
}

pub fn decompose(kind: DecomposeKind, arg: &str) -> Result<Output> {
    let m = parse_matrix(&input_text(arg)?)?;
    let rep = match kind {
        DecomposeKind::Dn => spectral::dn_decompose(&m)?,
        DecomposeKind::Primary => spectral::primary_decomposition(&m)?,
        DecomposeKind::Rational => spectral::rational_form(&m)?,
        DecomposeKind::Jordan => spectral::jordan_form(&m)?,
    };
    let mut out = format!("kind {}\n", rep.kind);
    for flag in &rep.flags {
        let _ = writeln!(out, "flag {flag}");
    }
    if let Some(rec) = &rep.recombined {
        for (name, mat) in &rec.mats {
            let _ = writeln!(out, "recombined {name} {}", print_matrix(mat));
        }
        for (name, poly) in &rec.polys {
            let _ = writeln!(out, "recombined {name} {}", print_poly(poly));
        }
    }
    for slot in [&rep.per_slot.0, &rep.per_slot.1] {
        let tag = match slot.slot {
            neutro_algebra::Slot::At0 => "slot0",
            neutro_algebra::Slot::At1 => "slot1",
        };
        for (name, mat) in &slot.mats {
            let _ = writeln!(out, "{tag} {name} {mat}");
        }
        for (name, poly) in &slot.polys {
            let _ = writeln!(out, "{tag} {name} {poly}");
        }
    }
    Ok(Output::ok(out))
}

pub fn conductor(matrix_arg: &str, vector_arg: &str, subspace_args: &[String]) -> Result<Output> {
    let m = parse_matrix(&input_text(matrix_arg)?)?;
    let field = m.field();
    let v = parse_tuple_with(&input_text(vector_arg)?, field)?;
    let mut w = Vec::new();
    for arg in subspace_args {
        w.push(parse_tuple_with(&input_text(arg)?, field)?);
    }
    let r = spectral::t_conductor(&m, &v, &w)?;
    Ok(Output::ok(annihilator_text(&r)))
}

fn label_string(label: &ComponentLabel) -> String {
    match label {
        ComponentLabel::SpecialSubNeutrosophic(over) => {
            format!("SpecialSubNeutrosophic({over})")
        }
        other => other.name().to_string(),
    }
}

pub fn classify(arg: &str, context: Option<&str>) -> Result<Output> {
    let (space, vectors) = parse_vectors(&input_text(arg)?)?;
    let ctx_fields = match context {
        Some(spec) => {
            let mut fields = Vec::new();
            for tag in spec.split(',') {
                fields.push(neutro_algebra::parse_field_tag(tag.trim())?);
            }
            Some(fields)
        }
        None => None,
    };
    let label = space.subspace_classify(&vectors, ctx_fields.as_deref());
    let mut out = String::new();
    for (i, comp) in label.per_component.iter().enumerate() {
        let _ = writeln!(out, "component {} {}", i + 1, label_string(comp));
    }
    let _ = writeln!(out, "overall {}", label.overall);
    Ok(Output::ok(out))
}

pub fn groupscan(modulus: u64, operation: ScanOp) -> Result<Output> {
    let (op, op_name) = match operation {
        ScanOp::Add => (groupscan::GroupOp::AdditiveModN, "add"),
        ScanOp::Mul => (groupscan::GroupOp::MultiplicativeNonzeroModN, "mul"),
    };
    let rep = groupscan::group_scan(modulus, op)?;
    let mut out = format!("modulus {} operation {}\n", rep.modulus, op_name);
    let _ = writeln!(out, "order {}", rep.order);
    let _ = writeln!(out, "group {}", rep.is_group);
    if let Some(reason) = &rep.failure_reason {
        let _ = writeln!(out, "reason {reason}");
    }
    if let Some((x, e)) = &rep.failure_witness {
        let _ = writeln!(out, "witness {x} identity {e}");
    }
    let _ = writeln!(out, "subgroups exhaustive={}", rep.subgroups_exhaustive);
    for (members, label) in &rep.subgroups {
        let names: Vec<String> = members.iter().map(|g| g.to_string()).collect();
        let _ = writeln!(out, "  {{{}}} {label}", names.join(", "));
    }
    Ok(Output::ok(out))
}
