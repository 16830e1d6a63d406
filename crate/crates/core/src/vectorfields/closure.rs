//! Graded Lie superalgebras spanned by polynomial vector fields.
//!
//! A field whose components are homogeneous polynomials of degree `d + 1`
//! has degree `d`; brackets add degrees. Closure keeps one reducer per
//! degree and rejects any nonzero bracket outside `−1..=1`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::PolyVectorField;
use crate::error::{Error, Result};
use crate::liealg::LieSuperAlgebra;
use crate::linalg::{Reducer, SparseVec};
use crate::scalars::{Monomial, Parity, Rational};

const MAX_BASIS: usize = 256;

type FieldKey = (usize, Monomial);

/// A depth-one graded Lie superalgebra of vector fields together with the
/// fields realizing its basis.
#[derive(Debug, Clone)]
pub struct FieldAlgebra {
    pub algebra: LieSuperAlgebra,
    pub fields: Vec<PolyVectorField>,
    reducers: BTreeMap<i32, (Reducer<FieldKey>, Vec<usize>)>,
}

impl FieldAlgebra {
    /// Coordinates of a homogeneous field in the basis, if it lies in the
    /// span.
    pub fn coordinates(&self, x: &PolyVectorField) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.fields.len()];
        if x.is_zero() {
            return Some(out);
        }
        let d = field_degree(x).ok()?;
        let (reducer, globals) = self.reducers.get(&d)?;
        for (k, c) in reducer.coordinates(&key_vector(x))? {
            out[globals[k]] = c;
        }
        Some(out)
    }
}

pub(crate) fn field_degree(x: &PolyVectorField) -> Result<i32> {
    let mut degree = None;
    for c in x.components() {
        for (m, _) in c.terms() {
            let d = m.degree() as i32 - 1;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::Inhomogeneous(format!("field {x} mixes degrees"))),
                _ => {}
            }
        }
    }
    degree.ok_or_else(|| Error::InvalidInput("the zero field has no degree".into()))
}

fn key_vector(x: &PolyVectorField) -> SparseVec<FieldKey> {
    let mut v = SparseVec::new();
    for (k, c) in x.components().iter().enumerate() {
        for (m, a) in c.terms() {
            v.insert((k, m.clone()), a.clone());
        }
    }
    v
}

struct Pending {
    field: PolyVectorField,
    degree: i32,
    parity: Parity,
    name: String,
}

/// Closes the span of `generators` under the bracket. Every generator and
/// every bracket must be homogeneous in degree and parity.
pub fn close_fields(
    name: impl Into<String>,
    generators: Vec<(PolyVectorField, String)>,
) -> Result<FieldAlgebra> {
    let mut reducers: BTreeMap<i32, (Reducer<FieldKey>, Vec<usize>)> = BTreeMap::new();
    let mut found: Vec<Pending> = Vec::new();
    let mut add = |field: PolyVectorField, name: String, found: &mut Vec<Pending>| -> Result<()> {
        if field.is_zero() {
            return Ok(());
        }
        let degree = field_degree(&field)?;
        if !(-1..=1).contains(&degree) {
            return Err(Error::Closure(format!("{name} = {field} has degree {degree}")));
        }
        let parity =
            field.parity().ok_or_else(|| Error::Inhomogeneous(format!("{name} = {field} mixes parities")))?;
        let (reducer, globals) = reducers.entry(degree).or_default();
        if reducer.insert(&key_vector(&field)).is_some() {
            if found.len() == MAX_BASIS {
                return Err(Error::Closure(format!("span exceeds {MAX_BASIS} fields")));
            }
            globals.push(found.len());
            found.push(Pending { field, degree, parity, name });
        }
        Ok(())
    };
    for (f, n) in generators {
        add(f, n, &mut found)?;
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..=i {
            let z = found[i].field.bracket(&found[j].field)?;
            let n = format!("[{},{}]", found[i].name, found[j].name);
            add(z, n, &mut found)?;
        }
        i += 1;
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_key(|&k| found[k].degree);
    let mut position = vec![0; found.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    for (_, globals) in reducers.values_mut() {
        for g in globals.iter_mut() {
            *g = position[*g];
        }
    }
    let fields: Vec<PolyVectorField> = order.iter().map(|&k| found[k].field.clone()).collect();
    let mut table = BTreeMap::new();
    for (a, x) in fields.iter().enumerate() {
        for (b, y) in fields.iter().enumerate() {
            let z = x.bracket(y)?;
            if z.is_zero() {
                continue;
            }
            let d = field_degree(&z)?;
            let (reducer, globals) =
                reducers.get(&d).ok_or_else(|| Error::Closure(format!("bracket {a},{b} leaves the span")))?;
            let coords = reducer
                .coordinates(&key_vector(&z))
                .ok_or_else(|| Error::Closure(format!("bracket {a},{b} leaves the span")))?;
            table.insert((a, b), coords.into_iter().map(|(k, c)| (globals[k], c)).collect());
        }
    }
    let algebra = LieSuperAlgebra::from_table(
        name,
        order.iter().map(|&k| found[k].name.clone()).collect(),
        order.iter().map(|&k| found[k].parity).collect(),
        Some(order.iter().map(|&k| found[k].degree).collect()),
        table,
    )?;
    Ok(FieldAlgebra { algebra, fields, reducers })
}
