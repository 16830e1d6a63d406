use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use superalg::crossratio::{
    cross_ratio, cross_ratio_quadric, invariance_harness, invariants_ber, invariants_det, invariants_qet,
    quadric_harness, HarnessConfig, InvariantCollection, PointQuadruple, QuadraticSpace, QuadrupleJson,
    Variant,
};
use superalg::jordan::{JordanJson, JordanSuperAlgebra};
use superalg::liealg::{AlgebraJson, GradingReport, LieSuperAlgebra};
use superalg::scalars::{format_rational, parse_rational, SuperPolynomial};
use superalg::supermatrix::{BlockSignature, MatrixJson, SuperMatrix};
use superalg::vectorfields::{
    ce_field, ce_graded_algebra, derived_bracket, divergence, is_homological, kan_build_with, roundtrip_of,
    FieldJson, KanConfig, PolyVectorField,
};

use crate::inputs::{self, AlgebraWithElement, Point, QuadricJson};
use crate::report::{finish, Failure, Provenance};
use crate::{AlgebraVerb, CrossArgs, InvarianceArgs, JordanVerb, Outcome, Source, Verb};

pub const DEGREE_CAP_VAR: &str = "SUPERALG_DEGREE_CAP";

fn poly(p: &SuperPolynomial) -> Value {
    json!(p.to_term_list())
}

fn one_of<'a>(src: &'a Source) -> Result<Either<'a>, Failure> {
    match (&src.input, &src.params) {
        (Some(p), None) => Ok(Either::Path(p)),
        (None, Some(s)) => Ok(Either::Params(s)),
        _ => Err(Failure::invalid("give exactly one of --in and --params")),
    }
}

enum Either<'a> {
    Path(&'a PathBuf),
    Params(&'a str),
}

fn path_only(src: &Source) -> Result<&PathBuf, Failure> {
    match (&src.input, &src.params) {
        (Some(p), None) => Ok(p),
        _ => Err(Failure::invalid("this verb reads --in only")),
    }
}

fn load_algebra(src: &Source, prov: &mut Provenance) -> Result<LieSuperAlgebra, Failure> {
    match one_of(src)? {
        Either::Path(p) => inputs::algebra_from(&inputs::read_doc::<AlgebraJson>(p, prov)?),
        Either::Params(s) => {
            prov.params = Some(s.to_string());
            inputs::series(s)
        }
    }
}

fn load_jordan(src: &Source, prov: &mut Provenance) -> Result<JordanSuperAlgebra, Failure> {
    match one_of(src)? {
        Either::Path(p) => inputs::jordan_from(&inputs::read_doc::<JordanJson>(p, prov)?),
        Either::Params(s) => {
            prov.params = Some(s.to_string());
            inputs::jordan(s)
        }
    }
}

fn load_field(p: &Path, prov: &mut Provenance) -> Result<PolyVectorField, Failure> {
    Ok(PolyVectorField::from_json(&inputs::read_doc::<FieldJson>(p, prov)?)?)
}

fn load_matrix(src: &Source, prov: &mut Provenance) -> Result<SuperMatrix, Failure> {
    let p = path_only(src)?;
    Ok(SuperMatrix::from_json(&inputs::read_doc::<MatrixJson>(p, prov)?)?)
}

fn kan_config() -> Result<KanConfig, Failure> {
    let mut c = KanConfig::default();
    if let Ok(v) = std::env::var(DEGREE_CAP_VAR) {
        c.degree_cap =
            v.trim().parse().map_err(|_| Failure::invalid(format!("{DEGREE_CAP_VAR} must be an integer")))?;
    }
    Ok(c)
}

pub fn dispatch(verb: Verb, seed: u64) -> Outcome {
    let mut prov = Provenance::default();
    match verb {
        Verb::Algebra(AlgebraVerb::Build { params }) => {
            prov.params = Some(params.clone());
            let g = inputs::series(&params)?;
            let dims = json!({ "even": g.sdim().0, "odd": g.sdim().1 });
            finish("algebra build", &prov, true, json!({ "algebra": g.to_json(), "dims": dims }))
        }
        Verb::Algebra(AlgebraVerb::Check(src)) => {
            let g = load_algebra(&src, &mut prov)?;
            let r = g.check_axioms();
            finish("algebra check", &prov, r.ok, r)
        }
        Verb::Jordan(JordanVerb::Build { params }) => {
            prov.params = Some(params.clone());
            let j = inputs::jordan(&params)?;
            finish("jordan build", &prov, true, json!({ "jordan": j.to_json() }))
        }
        Verb::Jordan(JordanVerb::Check(src)) => {
            let j = load_jordan(&src, &mut prov)?;
            let sc = j.check_supercommutativity();
            let par = j.check_parity();
            let ji = j.check_jordan_identity()?;
            let unit = j.check_unit();
            let passed = sc.ok && par.ok && ji.ok && unit != Some(false);
            let result = json!({
                "jordan_identity": ji,
                "parity": par,
                "supercommutativity": sc,
                "unit": unit,
            });
            finish("jordan check", &prov, passed, result)
        }
        Verb::Kan(src) => {
            let j = load_jordan(&src, &mut prov)?;
            let kan = kan_build_with(&j, &kan_config()?)?;
            let dims = GradingReport::from_algebra(kan.algebra())
                .ok_or_else(|| Failure::invalid("kan algebra carries no grading"))?;
            let p: Vec<String> = kan.p.iter().map(format_rational).collect();
            finish(
                "kan",
                &prov,
                true,
                json!({ "algebra": kan.algebra().to_json(), "dims": dims.dims, "p": p }),
            )
        }
        Verb::Roundtrip(src) => {
            let j = load_jordan(&src, &mut prov)?;
            let kan = kan_build_with(&j, &kan_config()?)?;
            let r = roundtrip_of(&j, &kan)?;
            finish("roundtrip", &prov, r.ok, r)
        }
        Verb::Ce(src) => {
            let g = load_algebra(&src, &mut prov)?;
            let q = ce_field(&g)?;
            finish("ce", &prov, true, json!({ "field": q.to_json(), "display": q.to_string() }))
        }
        Verb::HomologicalCheck(src) => {
            let field = match one_of(&src)? {
                Either::Params(s) => {
                    prov.params = Some(s.to_string());
                    ce_field(&inputs::series(s)?)?
                }
                Either::Path(p) => {
                    let v: Value = inputs::read_doc(p, &mut prov)?;
                    if v.get("basis").is_some() {
                        let doc: AlgebraJson =
                            serde_json::from_value(v).map_err(|e| Failure::invalid(e.to_string()))?;
                        ce_field(&inputs::algebra_from(&doc)?)?
                    } else {
                        let doc: FieldJson =
                            serde_json::from_value(v).map_err(|e| Failure::invalid(e.to_string()))?;
                        PolyVectorField::from_json(&doc)?
                    }
                }
            };
            let r = is_homological(&field)?;
            finish("homological-check", &prov, r.homological, r)
        }
        Verb::DerivedBracket(src) => {
            let (g, p) = match one_of(&src)? {
                Either::Params(s) => {
                    prov.params = Some(s.to_string());
                    let (fa, p) = ce_graded_algebra(&inputs::series(s)?)?;
                    (fa.algebra, p)
                }
                Either::Path(path) => {
                    let doc: AlgebraWithElement = inputs::read_doc(path, &mut prov)?;
                    let p = doc.p.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>, _>>()?;
                    (inputs::algebra_from(&doc.algebra)?, p)
                }
            };
            let h = derived_bracket(&g, &p)?;
            finish("derived-bracket", &prov, true, json!({ "algebra": h.to_json() }))
        }
        Verb::Divergence(src) => {
            let x = load_field(path_only(&src)?, &mut prov)?;
            finish("divergence", &prov, true, json!({ "divergence": poly(&divergence(&x)?) }))
        }
        Verb::Str(src) => {
            let m = load_matrix(&src, &mut prov)?;
            finish("str", &prov, true, json!({ "value": poly(&m.supertrace()?) }))
        }
        Verb::Ber(src) => {
            let m = load_matrix(&src, &mut prov)?;
            finish("ber", &prov, true, json!({ "value": poly(&m.berezinian()?) }))
        }
        Verb::Qtr(src) => {
            let m = load_matrix(&src, &mut prov)?;
            finish("qtr", &prov, true, json!({ "value": poly(&m.queer_trace()?) }))
        }
        Verb::Qet(src) => {
            let m = load_matrix(&src, &mut prov)?;
            finish("qet", &prov, true, json!({ "value": poly(&m.queer_determinant()?) }))
        }
        Verb::Crossratio(args) => crossratio(args, &mut prov),
        Verb::Invariance(args) => invariance(args, seed, &mut prov),
        Verb::Run { .. } => Err(Failure::invalid("nested run")),
    }
}

fn collection_json(c: &InvariantCollection) -> Value {
    json!({
        "coeffs": c.coefficients.iter().map(poly).collect::<Vec<_>>(),
        "order": c.order,
        "variant": c.variant,
    })
}

fn crossratio(args: CrossArgs, prov: &mut Provenance) -> Outcome {
    let variant: Variant = args.variant.parse()?;
    if variant == Variant::Quadric {
        let doc: QuadricJson = inputs::read_doc(&args.input, prov)?;
        let ctx = doc.context.to_context()?;
        let sig = BlockSignature::new(doc.signature[0], doc.signature[1]);
        let space = match &doc.gram {
            None => QuadraticSpace::standard(sig.even, sig.odd)?,
            Some(g) => {
                let g = g
                    .iter()
                    .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                QuadraticSpace::new(sig, g)?
            }
        };
        if doc.points.len() != 4 {
            return Err(Failure::invalid("a quadruple needs exactly four points"));
        }
        let pts: Vec<Point> = doc
            .points
            .iter()
            .map(|p| {
                p.iter().map(|t| SuperPolynomial::from_term_list(&ctx, t)).collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        let v = cross_ratio_quadric(&space, &pts[0], &pts[1], &pts[2], &pts[3])?;
        return finish("crossratio", prov, true, json!({ "value": poly(&v), "variant": variant }));
    }
    let doc: QuadrupleJson = inputs::read_doc(&args.input, prov)?;
    let q = PointQuadruple::from_json(&doc)?;
    let sig = q.signature();
    let x = cross_ratio(&q)?;
    let inv = match variant {
        Variant::Det => invariants_det(&q)?,
        Variant::Ber => invariants_ber(&q, args.order.unwrap_or(sig.dim()))?,
        _ => invariants_qet(&q, args.order.unwrap_or(sig.even))?,
    };
    let mut result = collection_json(&inv);
    result["cross_ratio"] = json!(x.to_json());
    finish("crossratio", prov, true, result)
}

fn invariance(args: InvarianceArgs, seed: u64, prov: &mut Provenance) -> Outcome {
    let variant: Variant = args.variant.parse()?;
    prov.params = Some(args.params.clone());
    prov.seed = Some(seed);
    let sig = inputs::signature(&args.params)?;
    let config =
        HarnessConfig { samples: args.samples, seed, odd_generators: args.odd_generators, order: args.order };
    let r = match variant {
        Variant::Quadric => quadric_harness(&QuadraticSpace::standard(sig.even, sig.odd)?, &config)?,
        v => invariance_harness(v, sig, &config)?,
    };
    finish("invariance", prov, r.ok(), r)
}
