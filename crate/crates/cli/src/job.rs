use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::report::{Failure, Provenance, FORMAT_VERSION};
use crate::{AlgebraVerb, CrossArgs, InvarianceArgs, JordanVerb, Outcome, Source, Verb};

/// A verb with its options, read from a file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub format_version: u32,
    pub verb: String,
    #[serde(default)]
    pub input: Option<PathBuf>,
    #[serde(default)]
    pub params: Option<String>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub variant: Option<String>,
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub odd_generators: Option<usize>,
}

fn verb_of(job: &JobSpec, base: &Path) -> Result<Verb, Failure> {
    let input = job.input.as_ref().map(|p| if p.is_relative() { base.join(p) } else { p.clone() });
    let src = Source { input: input.clone(), params: job.params.clone() };
    let params = || job.params.clone().ok_or_else(|| Failure::invalid("job needs params"));
    let variant = || job.variant.clone().ok_or_else(|| Failure::invalid("job needs variant"));
    Ok(match job.verb.as_str() {
        "algebra build" => Verb::Algebra(AlgebraVerb::Build { params: params()? }),
        "algebra check" => Verb::Algebra(AlgebraVerb::Check(src)),
        "jordan build" => Verb::Jordan(JordanVerb::Build { params: params()? }),
        "jordan check" => Verb::Jordan(JordanVerb::Check(src)),
        "kan" => Verb::Kan(src),
        "roundtrip" => Verb::Roundtrip(src),
        "ce" => Verb::Ce(src),
        "homological-check" => Verb::HomologicalCheck(src),
        "derived-bracket" => Verb::DerivedBracket(src),
        "divergence" => Verb::Divergence(src),
        "str" => Verb::Str(src),
        "ber" => Verb::Ber(src),
        "qtr" => Verb::Qtr(src),
        "qet" => Verb::Qet(src),
        "crossratio" => Verb::Crossratio(CrossArgs {
            variant: variant()?,
            order: job.order,
            input: input.ok_or_else(|| Failure::invalid("job needs input"))?,
        }),
        "invariance" => Verb::Invariance(InvarianceArgs {
            variant: variant()?,
            params: params()?,
            samples: job.samples.unwrap_or(200),
            order: job.order,
            odd_generators: job.odd_generators.unwrap_or(4),
        }),
        other => return Err(Failure::invalid(format!("unknown verb {other:?}"))),
    })
}

pub fn run_job(path: &Path) -> Outcome {
    let mut prov = Provenance::default();
    let job: JobSpec = crate::inputs::read_doc(path, &mut prov)?;
    if job.format_version != FORMAT_VERSION {
        return Err(Failure::invalid(format!("unsupported format_version {}", job.format_version)));
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let verb = verb_of(&job, base)?;
    crate::verbs::dispatch(verb, job.seed.unwrap_or(superalg::random::DEFAULT_SEED))
}
