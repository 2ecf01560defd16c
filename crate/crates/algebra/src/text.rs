//! Text formats for every object the library exchanges: scalar, polynomial,
//! and matrix literals with trailing field tags, and JSON documents for
//! matrices, spaces, vector lists, and maps.
//!
//! Parsing and printing are inverse in one direction: `parse(print(x)) == x`
//! for every `x` the library can print. The other direction canonicalizes,
//! since the grammars accept freedom the printers do not use (term order,
//! repeated powers, redundant signs, whitespace).
//!
//! All syntax failures surface as [`NError::ParseError`] with a line, a
//! column, and the token class that was expected there. Documents that are
//! well-formed text but denote no valid object (a non-prime modulus, a
//! ragged matrix, a vector that does not fit its space) are parse errors
//! too: the document as a whole failed to describe anything.

use num::{BigInt, BigRational};
use serde_json::{Map, Value};

use crate::error::{NError, Result};
use crate::field::{Base, BaseElem, FieldDescriptor, Flavor};
use crate::matrix::NMatrix;
use crate::nspace::{
    ComponentAmbient, NFoldField, NFoldKind, NFoldMap, NFoldSpace, NFoldVector, Part, Shape,
};
use crate::poly::NPoly;
use crate::scalar::NNum;

/// Exponents above this bound are rejected rather than allocated.
const MAX_EXPONENT: usize = 65_536;

// ---------------------------------------------------------------------------
// cursor

/// Character cursor with line/column tracking; every grammar below reads
/// through one of these so error positions are uniform.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(s: &str) -> Self {
        Cursor { chars: s.chars().collect(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(NError::ParseError { line: self.line, col: self.col, expected: expected.into() })
    }

    fn expect(&mut self, c: char, expected: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            self.err(expected)
        }
    }

    /// Nonempty ascii digit run, unbounded length (rationals carry
    /// arbitrary-precision values through round trips).
    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return self.err("a digit");
        }
        Ok(s)
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.peek().is_some() {
            return self.err("end of input");
        }
        Ok(())
    }
}

fn elem_from_digits(digits: &str, base: Base) -> BaseElem {
    match base {
        Base::Rationals => {
            let n = BigInt::parse_bytes(digits.as_bytes(), 10).expect("digit run");
            BaseElem::Rat(BigRational::from(n))
        }
        Base::Prime(p) => {
            let v = digits.bytes().fold(0u64, |acc, b| (acc * 10 + u64::from(b - b'0')) % p);
            BaseElem::Mod(v, p)
        }
    }
}

// ---------------------------------------------------------------------------
// field tags

/// `Q`, `Z<p>`, `N(Q)`, `N(Z<p>)`, `QI`, `Z<p>I`.
pub fn parse_field_tag(s: &str) -> Result<FieldDescriptor> {
    let mut cur = Cursor::new(s);
    let field = field_tag(&mut cur)?;
    cur.expect_end()?;
    Ok(field)
}

fn field_tag(cur: &mut Cursor) -> Result<FieldDescriptor> {
    cur.skip_ws();
    if cur.eat('N') {
        cur.expect('(', "( after N")?;
        let core = base_core(cur)?;
        cur.expect(')', ") closing the field tag")?;
        return Ok(core.full());
    }
    let core = base_core(cur)?;
    if cur.eat('I') {
        return Ok(FieldDescriptor { flavor: Flavor::PureNeutrosophic, ..core });
    }
    Ok(core)
}

/// `Q` or `Z<p>`, returned real-flavored; callers wrap the flavor on.
fn base_core(cur: &mut Cursor) -> Result<FieldDescriptor> {
    cur.skip_ws();
    if cur.eat('Q') {
        return Ok(FieldDescriptor::rationals(Flavor::Real));
    }
    if cur.eat('Z') {
        let at = (cur.line, cur.col);
        let digits = cur.digits()?;
        let p: u64 = digits
            .parse()
            .map_err(|_| NError::ParseError { line: at.0, col: at.1, expected: "a prime that fits in u64".into() })?;
        return FieldDescriptor::prime(p, Flavor::Real)
            .map_err(|_| NError::ParseError { line: at.0, col: at.1, expected: "a prime modulus".into() });
    }
    cur.err("a field tag (Q or Z<p>)")
}

// ---------------------------------------------------------------------------
// scalars

/// Scalar document: `<literal>@<tag>`, e.g. `1+2I@N(Z3)`.
pub fn parse_scalar(s: &str) -> Result<NNum> {
    let (body, field) = split_tag(s)?;
    parse_scalar_with(body, field)
}

/// Scalar literal against a known field, e.g. entries inside a matrix.
pub fn parse_scalar_with(s: &str, field: FieldDescriptor) -> Result<NNum> {
    let mut cur = Cursor::new(s);
    let x = scalar_body(&mut cur, field)?;
    cur.expect_end()?;
    Ok(x)
}

/// Splits `body@tag` at the last `@`; the tag parses first so the body can
/// be read against its field.
fn split_tag(s: &str) -> Result<(&str, FieldDescriptor)> {
    let Some((body, tag)) = s.rsplit_once('@') else {
        let cur = Cursor::new(s);
        return cur.err("a literal followed by @<field tag>");
    };
    Ok((body, parse_field_tag(tag)?))
}

/// One atom: `I`, `<num>`, `<num>I`, `<num>/<num>`, `<num>/<num>I`.
/// Returns the base value and whether it multiplies `I`.
fn scalar_atom(cur: &mut Cursor, base: Base) -> Result<(BaseElem, bool)> {
    cur.skip_ws();
    match cur.peek() {
        Some('I') => {
            cur.bump();
            Ok((BaseElem::from_i64(1, base), true))
        }
        Some(c) if c.is_ascii_digit() => {
            let num = elem_from_digits(&cur.digits()?, base);
            let val = if cur.eat('/') {
                let at = (cur.line, cur.col);
                let den = elem_from_digits(&cur.digits()?, base);
                num.div(&den).map_err(|_| NError::ParseError {
                    line: at.0,
                    col: at.1,
                    expected: "an invertible denominator".into(),
                })?
            } else {
                num
            };
            Ok((val, cur.eat('I')))
        }
        _ => cur.err("a number or I"),
    }
}

/// Signed atom sum, accumulated by part; stops before any character that
/// cannot continue the sum, so entries embed in matrices and tuples.
fn scalar_body(cur: &mut Cursor, field: FieldDescriptor) -> Result<NNum> {
    cur.skip_ws();
    let start = (cur.line, cur.col);
    let mut real = BaseElem::from_i64(0, field.base);
    let mut ipart = real.clone();
    let mut leading = true;
    loop {
        cur.skip_ws();
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else if leading {
            false
        } else {
            break;
        };
        let (mut val, is_i) = scalar_atom(cur, field.base)?;
        if neg {
            val = val.neg();
        }
        if is_i {
            ipart = ipart.add(&val);
        } else {
            real = real.add(&val);
        }
        leading = false;
        cur.skip_ws();
        if !matches!(cur.peek(), Some('+') | Some('-')) {
            break;
        }
    }
    NNum::from_parts(real, ipart, field).map_err(|_| NError::ParseError {
        line: start.0,
        col: start.1,
        expected: format!("a scalar lying in {}", field.tag()),
    })
}

/// Canonical scalar document; inverse of [`parse_scalar`].
pub fn print_scalar(x: &NNum) -> String {
    format!("{}@{}", x, x.field.tag())
}

// ---------------------------------------------------------------------------
// polynomials

/// Polynomial document: `<body>@<tag>`, e.g. `x^2+(2I+1)x+2I@N(Z3)`.
pub fn parse_poly(s: &str) -> Result<NPoly> {
    let (body, field) = split_tag(s)?;
    parse_poly_with(body, field)
}

/// Polynomial literal against a known field.
pub fn parse_poly_with(s: &str, field: FieldDescriptor) -> Result<NPoly> {
    let mut cur = Cursor::new(s);
    let p = poly_body(&mut cur, field)?;
    cur.expect_end()?;
    Ok(p)
}

/// Terms are `(scalar)x^k`, `<atom>x^k`, `x^k`, or a bare coefficient;
/// repeated degrees accumulate. Coefficients with more than one atom must
/// be parenthesized, which is exactly what the printer emits.
fn poly_body(cur: &mut Cursor, field: FieldDescriptor) -> Result<NPoly> {
    let mut coeffs: Vec<NNum> = Vec::new();
    let mut leading = true;
    loop {
        cur.skip_ws();
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else if leading {
            false
        } else {
            break;
        };
        cur.skip_ws();
        let at = (cur.line, cur.col);
        let coeff = if cur.eat('(') {
            let c = scalar_body(cur, field)?;
            cur.expect(')', ") closing the coefficient")?;
            Some(c)
        } else if matches!(cur.peek(), Some('I')) || matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let (val, is_i) = scalar_atom(cur, field.base)?;
            let zero = BaseElem::from_i64(0, field.base);
            let (a, b) = if is_i { (zero, val) } else { (val, zero) };
            Some(NNum::from_parts(a, b, field).map_err(|_| NError::ParseError {
                line: at.0,
                col: at.1,
                expected: format!("a coefficient lying in {}", field.tag()),
            })?)
        } else {
            None
        };
        cur.skip_ws();
        let deg = if cur.eat('x') {
            if cur.eat('^') {
                let at = (cur.line, cur.col);
                let d: usize = cur.digits()?.parse().map_err(|_| NError::ParseError {
                    line: at.0,
                    col: at.1,
                    expected: "a smaller exponent".into(),
                })?;
                if d > MAX_EXPONENT {
                    return Err(NError::ParseError {
                        line: at.0,
                        col: at.1,
                        expected: format!("an exponent at most {MAX_EXPONENT}"),
                    });
                }
                d
            } else {
                1
            }
        } else {
            0
        };
        let Some(mut c) = coeff.or_else(|| (deg > 0).then(|| NNum::one(field))) else {
            return cur.err("a term");
        };
        if neg {
            c = c.neg();
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, NNum::zero(field));
        }
        coeffs[deg] = coeffs[deg].add(&c)?;
        leading = false;
        cur.skip_ws();
        if !matches!(cur.peek(), Some('+') | Some('-')) {
            break;
        }
    }
    NPoly::new(coeffs, field)
}

/// Canonical polynomial document; inverse of [`parse_poly`].
pub fn print_poly(p: &NPoly) -> String {
    format!("{}@{}", p, p.field().tag())
}

// ---------------------------------------------------------------------------
// tuples

/// `(s, s, ...)` against a known field; at least one entry.
pub fn parse_tuple_with(s: &str, field: FieldDescriptor) -> Result<Vec<NNum>> {
    let mut cur = Cursor::new(s);
    let t = tuple_body(&mut cur, field)?;
    cur.expect_end()?;
    Ok(t)
}

fn tuple_body(cur: &mut Cursor, field: FieldDescriptor) -> Result<Vec<NNum>> {
    cur.expect('(', "( opening a tuple")?;
    let mut entries = vec![scalar_body(cur, field)?];
    loop {
        cur.skip_ws();
        if cur.eat(',') {
            entries.push(scalar_body(cur, field)?);
        } else {
            break;
        }
    }
    cur.expect(')', ") closing the tuple")?;
    Ok(entries)
}

/// Canonical tuple literal, `(a, b, c)`.
pub fn print_tuple(entries: &[NNum]) -> String {
    let body: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!("({})", body.join(", "))
}

// ---------------------------------------------------------------------------
// matrices

/// Matrix document, either terse `[[...],[...]]@<tag>` or a JSON object
/// `{"field": tag, "rows": [[entry strings]]}`. Dispatch is on the first
/// non-whitespace character.
pub fn parse_matrix(s: &str) -> Result<NMatrix> {
    let mut probe = Cursor::new(s);
    probe.skip_ws();
    match probe.peek() {
        Some('{') => parse_matrix_json(s),
        Some('[') => {
            let (body, field) = split_tag(s)?;
            parse_matrix_with(body, field)
        }
        _ => probe.err("a matrix document ([[...]]@tag or JSON)"),
    }
}

/// Terse matrix literal without its tag, against a known field.
pub fn parse_matrix_with(s: &str, field: FieldDescriptor) -> Result<NMatrix> {
    let mut cur = Cursor::new(s);
    let m = matrix_body(&mut cur, field)?;
    cur.expect_end()?;
    Ok(m)
}

fn matrix_body(cur: &mut Cursor, field: FieldDescriptor) -> Result<NMatrix> {
    cur.expect('[', "[ opening a matrix")?;
    let start = (cur.line, cur.col);
    let mut rows: Vec<Vec<NNum>> = Vec::new();
    loop {
        cur.expect('[', "[ opening a row")?;
        let mut row = vec![scalar_body(cur, field)?];
        loop {
            cur.skip_ws();
            if cur.eat(',') {
                row.push(scalar_body(cur, field)?);
            } else {
                break;
            }
        }
        cur.expect(']', "] closing the row")?;
        rows.push(row);
        cur.skip_ws();
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']', "] closing the matrix")?;
    NMatrix::from_rows(rows, field).map_err(|_| NError::ParseError {
        line: start.0,
        col: start.1,
        expected: "rectangular rows of equal length".into(),
    })
}

fn json_parse(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| NError::ParseError {
        line: e.line(),
        col: e.column(),
        expected: "well-formed JSON".into(),
    })
}

/// Structural complaints about an already-well-formed JSON document carry
/// the offending path instead of a position.
fn doc_err<T>(expected: impl Into<String>) -> Result<T> {
    Err(NError::ParseError { line: 1, col: 1, expected: expected.into() })
}

fn obj_of<'v>(v: &'v Value, what: &str, keys: &[&str]) -> Result<&'v Map<String, Value>> {
    let Some(obj) = v.as_object() else {
        return doc_err(format!("a JSON object for {what}"));
    };
    for k in obj.keys() {
        if !keys.contains(&k.as_str()) {
            return doc_err(format!("only keys {keys:?} in {what}, not \"{k}\""));
        }
    }
    for k in keys {
        if !obj.contains_key(*k) {
            return doc_err(format!("key \"{k}\" in {what}"));
        }
    }
    Ok(obj)
}

fn str_of<'v>(v: &'v Value, what: &str) -> Result<&'v str> {
    v.as_str().map_or_else(|| doc_err(format!("a string for {what}")), Ok)
}

fn arr_of<'v>(v: &'v Value, what: &str) -> Result<&'v [Value]> {
    v.as_array().map_or_else(|| doc_err(format!("an array for {what}")), |a| Ok(a.as_slice()))
}

fn parse_matrix_json(s: &str) -> Result<NMatrix> {
    let v = json_parse(s)?;
    matrix_from_value(&v)
}

fn matrix_from_value(v: &Value) -> Result<NMatrix> {
    let obj = obj_of(v, "a matrix", &["field", "rows"])?;
    let field = parse_field_tag(str_of(&obj["field"], "\"field\"")?)?;
    let mut rows = Vec::new();
    for (i, row) in arr_of(&obj["rows"], "\"rows\"")?.iter().enumerate() {
        let mut out = Vec::new();
        for (j, cell) in arr_of(row, "each row")?.iter().enumerate() {
            let lit = str_of(cell, "each entry")?;
            out.push(parse_scalar_with(lit, field).map_err(|e| match e {
                NError::ParseError { line, col, expected } => NError::ParseError {
                    line,
                    col,
                    expected: format!("{expected} at rows[{i}][{j}]"),
                },
                other => other,
            })?);
        }
        rows.push(out);
    }
    NMatrix::from_rows(rows, field)
        .map_err(|_| NError::ParseError { line: 1, col: 1, expected: "rectangular nonempty rows".into() })
}

/// Canonical terse matrix document; inverse of [`parse_matrix`].
pub fn print_matrix(m: &NMatrix) -> String {
    format!("{}@{}", m, m.field().tag())
}

/// JSON matrix document with one entry string per cell.
pub fn print_matrix_json(m: &NMatrix) -> String {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array((0..m.cols()).map(|j| Value::String(m.get(i, j).to_string())).collect())
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("field".into(), Value::String(m.field().tag()));
    obj.insert("rows".into(), Value::Array(rows));
    Value::Object(obj).to_string()
}

// ---------------------------------------------------------------------------
// spaces

fn shape_to_str(shape: Shape) -> String {
    match shape {
        Shape::Tuple(n) => format!("tuple:{n}"),
        Shape::Matrix(r, c) => format!("matrix:{r}x{c}"),
        Shape::PolyUpTo(d) => format!("poly:{d}"),
        Shape::PolyAny => "polyany".into(),
    }
}

fn shape_from_str(s: &str) -> Result<Shape> {
    let bad = || doc_err(format!("a shape (tuple:<n>, matrix:<r>x<c>, poly:<d>, polyany), not \"{s}\""));
    if s == "polyany" {
        return Ok(Shape::PolyAny);
    }
    let Some((kind, dims)) = s.split_once(':') else {
        return bad();
    };
    match kind {
        "tuple" => dims.parse().map(Shape::Tuple).or_else(|_| bad()),
        "poly" => dims.parse().map(Shape::PolyUpTo).or_else(|_| bad()),
        "matrix" => {
            let Some((r, c)) = dims.split_once('x') else {
                return bad();
            };
            match (r.parse(), c.parse()) {
                (Ok(r), Ok(c)) => Ok(Shape::Matrix(r, c)),
                _ => bad(),
            }
        }
        _ => bad(),
    }
}

/// Space document:
/// `{"kind": "TypeI"|"TypeII", "components": [{"shape", "scalars", "entries"}, ...]}`.
pub fn parse_space(s: &str) -> Result<NFoldSpace> {
    let v = json_parse(s)?;
    space_from_value(&v)
}

fn space_from_value(v: &Value) -> Result<NFoldSpace> {
    let obj = obj_of(v, "a space", &["kind", "components"])?;
    let kind = match str_of(&obj["kind"], "\"kind\"")? {
        "TypeI" => NFoldKind::TypeI,
        "TypeII" => NFoldKind::TypeII,
        other => return doc_err(format!("kind \"TypeI\" or \"TypeII\", not \"{other}\"")),
    };
    let mut scalars = Vec::new();
    let mut ambients = Vec::new();
    for comp in arr_of(&obj["components"], "\"components\"")? {
        let c = obj_of(comp, "each component", &["shape", "scalars", "entries"])?;
        scalars.push(parse_field_tag(str_of(&c["scalars"], "\"scalars\"")?)?);
        ambients.push(ComponentAmbient {
            shape: shape_from_str(str_of(&c["shape"], "\"shape\"")?)?,
            entries: parse_field_tag(str_of(&c["entries"], "\"entries\"")?)?,
        });
    }
    let field = match kind {
        NFoldKind::TypeI => {
            let Some(&first) = scalars.first() else {
                return doc_err("at least one component");
            };
            if scalars.iter().any(|&f| f != first) {
                return doc_err("identical scalars in every TypeI component");
            }
            NFoldField::type_i(first, scalars.len())
        }
        NFoldKind::TypeII => NFoldField::type_ii(scalars),
    }
    .map_err(|e| bad_doc(e, "a valid scalar tuple"))?;
    NFoldSpace::new(field, ambients).map_err(|e| bad_doc(e, "a valid space"))
}

/// Downgrades a constructor rejection to a parse error: the text was
/// well-formed but named no object.
fn bad_doc(e: NError, fallback: &str) -> NError {
    let detail = match e {
        NError::InvalidSpace(msg) => msg,
        other => format!("{fallback} ({other})"),
    };
    NError::ParseError { line: 1, col: 1, expected: detail }
}

/// Canonical space document; inverse of [`parse_space`].
pub fn print_space(space: &NFoldSpace) -> String {
    space_value(space).to_string()
}

fn space_value(space: &NFoldSpace) -> Value {
    let kind = match space.field.kind {
        NFoldKind::TypeI => "TypeI",
        NFoldKind::TypeII => "TypeII",
    };
    let comps: Vec<Value> = (0..space.fold())
        .map(|i| {
            let amb = space.ambient(i);
            let mut c = Map::new();
            c.insert("shape".into(), Value::String(shape_to_str(amb.shape)));
            c.insert("scalars".into(), Value::String(space.scalars(i).tag()));
            c.insert("entries".into(), Value::String(amb.entries.tag()));
            Value::Object(c)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::String(kind.into()));
    obj.insert("components".into(), Value::Array(comps));
    Value::Object(obj)
}

// ---------------------------------------------------------------------------
// vectors

/// Vector-list document:
/// `{"space": <space>, "vectors": [[<part literal>, ...], ...]}`.
/// Part literals follow the component shape: tuples `(...)`, matrices
/// `[[...]]` without a tag, polynomials as bare bodies.
pub fn parse_vectors(s: &str) -> Result<(NFoldSpace, Vec<NFoldVector>)> {
    let v = json_parse(s)?;
    let obj = obj_of(&v, "a vector list", &["space", "vectors"])?;
    let space = space_from_value(&obj["space"])?;
    let mut vectors = Vec::new();
    for (k, row) in arr_of(&obj["vectors"], "\"vectors\"")?.iter().enumerate() {
        let lits = arr_of(row, "each vector")?;
        if lits.len() != space.fold() {
            return doc_err(format!("{} parts in vectors[{k}]", space.fold()));
        }
        let mut parts = Vec::new();
        for (i, lit) in lits.iter().enumerate() {
            let lit = str_of(lit, "each part")?;
            parts.push(parse_part_with(lit, space.ambient(i))?);
        }
        let vec = NFoldVector::new(space.clone(), parts)
            .map_err(|e| bad_doc(e, &format!("vectors[{k}] fitting the space")))?;
        vectors.push(vec);
    }
    Ok((space, vectors))
}

/// One component literal against its ambient description.
pub fn parse_part_with(s: &str, ambient: &ComponentAmbient) -> Result<Part> {
    match ambient.shape {
        Shape::Tuple(_) => Ok(Part::Tuple(parse_tuple_with(s, ambient.entries)?)),
        Shape::Matrix(_, _) => Ok(Part::Matrix(parse_matrix_with(s, ambient.entries)?)),
        Shape::PolyUpTo(_) | Shape::PolyAny => Ok(Part::Poly(parse_poly_with(s, ambient.entries)?)),
    }
}

/// Canonical part literal, matching [`parse_part_with`].
pub fn print_part(part: &Part) -> String {
    part.to_string()
}

/// Canonical vector-list document; inverse of [`parse_vectors`].
pub fn print_vectors(space: &NFoldSpace, vectors: &[NFoldVector]) -> String {
    let rows: Vec<Value> = vectors
        .iter()
        .map(|v| Value::Array(v.parts.iter().map(|p| Value::String(print_part(p))).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("space".into(), space_value(space));
    obj.insert("vectors".into(), Value::Array(rows));
    Value::Object(obj).to_string()
}

// ---------------------------------------------------------------------------
// maps

/// Map document:
/// `{"domain": <space>, "codomain": <space>, "assign": [targets, 1-indexed],
///   "mats": [<terse matrix>, ...]}`.
/// `assign[i]` names the codomain component that domain component i+1 maps
/// into; `mats[i]` is the component matrix in regime coordinates.
pub fn parse_map(s: &str) -> Result<NFoldMap> {
    let v = json_parse(s)?;
    let obj = obj_of(&v, "a map", &["domain", "codomain", "assign", "mats"])?;
    let domain = space_from_value(&obj["domain"])?;
    let codomain = space_from_value(&obj["codomain"])?;
    let mut assign = Vec::new();
    for (i, t) in arr_of(&obj["assign"], "\"assign\"")?.iter().enumerate() {
        let Some(t) = t.as_u64() else {
            return doc_err(format!("a positive component index at assign[{i}]"));
        };
        if t == 0 || t > codomain.fold() as u64 {
            return doc_err(format!("assign[{i}] between 1 and {}", codomain.fold()));
        }
        assign.push((t - 1) as usize);
    }
    let mats_v = arr_of(&obj["mats"], "\"mats\"")?;
    if mats_v.len() != domain.fold() {
        return doc_err(format!("{} matrices in \"mats\"", domain.fold()));
    }
    let mut mats = Vec::new();
    for (i, m) in mats_v.iter().enumerate() {
        let lit = str_of(m, "each matrix")?;
        mats.push(parse_matrix_with(lit, domain.scalars(i))?);
    }
    NFoldMap::new(domain, codomain, assign, mats).map_err(|e| bad_doc(e, "a consistent map"))
}

/// Canonical map document; inverse of [`parse_map`].
pub fn print_map(map: &NFoldMap) -> String {
    let mut obj = Map::new();
    obj.insert("domain".into(), space_value(&map.domain));
    obj.insert("codomain".into(), space_value(&map.codomain));
    obj.insert(
        "assign".into(),
        Value::Array(map.assign.iter().map(|&j| Value::from(j as u64 + 1)).collect()),
    );
    obj.insert(
        "mats".into(),
        Value::Array(map.mats.iter().map(|m| Value::String(m.to_string())).collect()),
    );
    Value::Object(obj).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nq() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::FullNeutrosophic)
    }

    fn nz(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p, Flavor::FullNeutrosophic).unwrap()
    }

    #[test]
    fn field_tags_round_trip() {
        for tag in ["Q", "Z5", "N(Q)", "N(Z5)", "QI", "Z5I", "N(Z2)"] {
            assert_eq!(parse_field_tag(tag).unwrap().tag(), tag);
        }
    }

    #[test]
    fn field_tag_rejects_composite_modulus() {
        let err = parse_field_tag("N(Z4)").unwrap_err();
        assert_eq!(
            err.to_string(),
            "ParseError line=1 col=4 expected a prime modulus"
        );
    }

    #[test]
    fn scalar_documents_round_trip() {
        for s in ["1+2I@N(Q)", "-3/2+1/2I@N(Q)", "2I@N(Z3)", "1-I@N(Q)", "0@Q", "I@Z5I", "-I@QI"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(print_scalar(&x), s);
        }
    }

    #[test]
    fn scalar_literals_canonicalize() {
        let x = parse_scalar("2I + 1 - I@N(Z3)").unwrap();
        assert_eq!(print_scalar(&x), "1+I@N(Z3)");
        let y = parse_scalar("7@N(Z5)").unwrap();
        assert_eq!(print_scalar(&y), "2@N(Z5)");
        let z = parse_scalar("4/6@N(Q)").unwrap();
        assert_eq!(print_scalar(&z), "2/3@N(Q)");
    }

    #[test]
    fn scalar_respects_flavor() {
        let err = parse_scalar("1+I@Q").unwrap_err();
        assert_eq!(err.to_string(), "ParseError line=1 col=1 expected a scalar lying in Q");
        assert!(parse_scalar("3@QI").is_err());
        assert!(parse_scalar("3I@QI").is_ok());
    }

    #[test]
    fn scalar_requires_tag_and_consumes_everything() {
        assert!(matches!(parse_scalar("1+2I"), Err(NError::ParseError { .. })));
        let err = parse_scalar_with("1+2I junk", nq()).unwrap_err();
        assert_eq!(err.to_string(), "ParseError line=1 col=6 expected end of input");
    }

    #[test]
    fn modular_fraction_needs_invertible_denominator() {
        assert_eq!(
            parse_scalar("1/5@N(Z5)").unwrap_err().to_string(),
            "ParseError line=1 col=3 expected an invertible denominator"
        );
        let x = parse_scalar("1/2@N(Z5)").unwrap();
        assert_eq!(print_scalar(&x), "3@N(Z5)");
    }

    #[test]
    fn poly_documents_round_trip() {
        for s in [
            "x^2+(2I+1)x+2I@N(Z3)",
            "x^3+(3I+2)x^2+(4I+1)x+(3I+1)@N(Z5)",
            "Ix^2+Ix+I@QI",
            "x-1@Q",
            "2@N(Q)",
            "x^3+(I+1)x^2+I@N(Z2)",
        ] {
            let p = parse_poly(s).unwrap();
            assert_eq!(print_poly(&p), s);
        }
    }

    #[test]
    fn poly_accumulates_repeated_degrees() {
        let p = parse_poly("x + x + 1 - 3@N(Q)").unwrap();
        assert_eq!(print_poly(&p), "2x-2@N(Q)");
    }

    #[test]
    fn poly_rejects_oversized_exponent() {
        let err = parse_poly_with("x^70000", nq()).unwrap_err();
        assert_eq!(
            err.to_string(),
            "ParseError line=1 col=3 expected an exponent at most 65536"
        );
    }

    #[test]
    fn matrix_terse_round_trip() {
        for s in ["[[I,0],[2,2]]@N(Z3)", "[[1+2I,0],[0,-1/2-1/2I]]@N(Q)", "[[I]]@Z5I"] {
            let m = parse_matrix(s).unwrap();
            assert_eq!(print_matrix(&m), s);
        }
    }

    #[test]
    fn matrix_rejects_ragged_rows() {
        let err = parse_matrix("[[1,2],[3]]@Q").unwrap_err();
        assert!(matches!(err, NError::ParseError { .. }));
        assert!(err.to_string().contains("rectangular"));
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = parse_matrix("[[I,0],[2,2]]@N(Z3)").unwrap();
        let doc = print_matrix_json(&m);
        assert_eq!(doc, r#"{"field":"N(Z3)","rows":[["I","0"],["2","2"]]}"#);
        assert_eq!(parse_matrix(&doc).unwrap(), m);
    }

    #[test]
    fn matrix_json_pins_entry_errors_to_their_cell() {
        let doc = r#"{"field":"N(Z3)","rows":[["I","0"],["2","x"]]}"#;
        let err = parse_matrix(doc).unwrap_err();
        assert_eq!(
            err.to_string(),
            "ParseError line=1 col=1 expected a number or I at rows[1][1]"
        );
    }

    #[test]
    fn json_syntax_errors_carry_positions() {
        let err = parse_matrix("{\"field\": \"N(Z3)\",\n  \"rows\": [[}").unwrap_err();
        let NError::ParseError { line, .. } = err else { panic!("wrong error") };
        assert_eq!(line, 2);
    }

    #[test]
    fn unknown_document_keys_are_rejected() {
        let err = parse_matrix(r#"{"field":"Q","rows":[["1"]],"extra":1}"#).unwrap_err();
        assert!(err.to_string().contains("\"extra\""));
    }

    fn tuple_space_doc() -> String {
        r#"{"kind":"TypeI","components":[{"shape":"tuple:2","scalars":"N(Q)","entries":"N(Q)"}]}"#
            .into()
    }

    #[test]
    fn space_documents_round_trip() {
        let doc = tuple_space_doc();
        let space = parse_space(&doc).unwrap();
        assert_eq!(space.fold(), 1);
        assert_eq!(space.scalars(0), nq());
        assert_eq!(print_space(&space), doc);

        let two = r#"{"kind":"TypeII","components":[{"shape":"matrix:2x2","scalars":"N(Z3)","entries":"N(Z3)"},{"shape":"poly:2","scalars":"N(Z5)","entries":"N(Z5)"}]}"#;
        let space = parse_space(two).unwrap();
        assert_eq!(space.fold(), 2);
        assert_eq!(space.ambient(0).shape, Shape::Matrix(2, 2));
        assert_eq!(space.ambient(1).shape, Shape::PolyUpTo(2));
        assert_eq!(print_space(&space), two);
    }

    #[test]
    fn type_one_space_requires_matching_scalars() {
        let doc = r#"{"kind":"TypeI","components":[{"shape":"tuple:2","scalars":"N(Q)","entries":"N(Q)"},{"shape":"tuple:2","scalars":"N(Z3)","entries":"N(Z3)"}]}"#;
        let err = parse_space(doc).unwrap_err();
        assert!(err.to_string().contains("identical scalars"));
    }

    #[test]
    fn type_two_space_rejects_contained_components() {
        let doc = r#"{"kind":"TypeII","components":[{"shape":"tuple:2","scalars":"N(Q)","entries":"N(Q)"},{"shape":"tuple:2","scalars":"Q","entries":"Q"}]}"#;
        let err = parse_space(doc).unwrap_err();
        assert!(err.to_string().contains("not independent"));
    }

    #[test]
    fn vector_documents_round_trip() {
        let doc = format!(
            r#"{{"space":{},"vectors":[["(1+2I, 0)"],["(I, -1/2)"]]}}"#,
            tuple_space_doc()
        );
        let (space, vectors) = parse_vectors(&doc).unwrap();
        assert_eq!(vectors.len(), 2);
        assert_eq!(print_vectors(&space, &vectors), doc);
    }

    #[test]
    fn vector_documents_cover_matrix_and_poly_parts() {
        let doc = r#"{"space":{"kind":"TypeII","components":[{"shape":"matrix:2x2","scalars":"N(Z3)","entries":"N(Z3)"},{"shape":"poly:2","scalars":"N(Z5)","entries":"N(Z5)"}]},"vectors":[["[[I,0],[2,2]]","x^2+(2I+1)x+2I"]]}"#;
        let (space, vectors) = parse_vectors(doc).unwrap();
        assert_eq!(print_vectors(&space, &vectors), doc);
    }

    #[test]
    fn vector_document_rejects_wrong_part_count() {
        let doc = format!(r#"{{"space":{},"vectors":[["(1, 0)","(0, 1)"]]}}"#, tuple_space_doc());
        let err = parse_vectors(&doc).unwrap_err();
        assert!(err.to_string().contains("1 parts in vectors[0]"));
    }

    #[test]
    fn vector_document_rejects_misfit_parts() {
        let doc = format!(r#"{{"space":{},"vectors":[["(1, 0, 0)"]]}}"#, tuple_space_doc());
        assert!(parse_vectors(&doc).is_err());
    }

    #[test]
    fn map_documents_round_trip() {
        let doc = format!(
            r#"{{"domain":{space},"codomain":{space},"assign":[1],"mats":["[[1,0],[I,1]]"]}}"#,
            space = tuple_space_doc()
        );
        let map = parse_map(&doc).unwrap();
        assert_eq!(map.assign, vec![0]);
        assert_eq!(print_map(&map), doc);
    }

    #[test]
    fn map_document_validates_assignment_range() {
        let doc = format!(
            r#"{{"domain":{space},"codomain":{space},"assign":[2],"mats":["[[1,0],[0,1]]"]}}"#,
            space = tuple_space_doc()
        );
        let err = parse_map(&doc).unwrap_err();
        assert!(err.to_string().contains("between 1 and 1"));
    }

    #[test]
    fn map_document_checks_matrix_shape() {
        let doc = format!(
            r#"{{"domain":{space},"codomain":{space},"assign":[1],"mats":["[[1,0,0],[0,1,0]]"]}}"#,
            space = tuple_space_doc()
        );
        assert!(parse_map(&doc).is_err());
    }

    fn arb_field() -> impl Strategy<Value = FieldDescriptor> {
        prop_oneof![
            Just(FieldDescriptor::rationals(Flavor::Real)),
            Just(FieldDescriptor::rationals(Flavor::FullNeutrosophic)),
            Just(FieldDescriptor::rationals(Flavor::PureNeutrosophic)),
            Just(FieldDescriptor::prime(5, Flavor::Real).unwrap()),
            Just(nz(5)),
            Just(FieldDescriptor::prime(5, Flavor::PureNeutrosophic).unwrap()),
        ]
    }

    fn arb_elem(field: FieldDescriptor) -> impl Strategy<Value = NNum> {
        ((-9i64..=9, 1i64..=4), (-9i64..=9, 1i64..=4)).prop_map(move |((an, ad), (bn, bd))| {
            let a = BaseElem::from_ratio(an, ad, field.base).unwrap();
            let b = BaseElem::from_ratio(bn, bd, field.base).unwrap();
            let (a, b) = match field.flavor {
                Flavor::Real => (a, BaseElem::from_i64(0, field.base)),
                Flavor::PureNeutrosophic => (BaseElem::from_i64(0, field.base), b),
                Flavor::FullNeutrosophic => (a, b),
            };
            NNum::from_parts(a, b, field).unwrap()
        })
    }

    proptest! {
        #[test]
        fn printed_scalars_parse_back(
            x in arb_field().prop_flat_map(arb_elem)
        ) {
            prop_assert_eq!(parse_scalar(&print_scalar(&x)).unwrap(), x);
        }

        #[test]
        fn printed_polys_parse_back(
            p in arb_field().prop_flat_map(|f| {
                proptest::collection::vec(arb_elem(f), 1..6)
                    .prop_map(move |cs| NPoly::new(cs, f).unwrap())
            })
        ) {
            prop_assert_eq!(parse_poly(&print_poly(&p)).unwrap(), p);
        }

        #[test]
        fn printed_matrices_parse_back(
            m in arb_field().prop_flat_map(|f| {
                (1usize..=3, 1usize..=3).prop_flat_map(move |(r, c)| {
                    proptest::collection::vec(arb_elem(f), r * c)
                        .prop_map(move |es| NMatrix::new(r, c, es, f).unwrap())
                })
            })
        ) {
            prop_assert_eq!(parse_matrix(&print_matrix(&m)).unwrap(), m.clone());
            prop_assert_eq!(parse_matrix(&print_matrix_json(&m)).unwrap(), m);
        }
    }
}
