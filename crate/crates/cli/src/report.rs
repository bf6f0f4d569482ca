//! Report builders for the single-shot commands: classify, ms-check,
//! discriminant, and archnewt.

use num_rational::BigRational;
use num_traits::Signed;
use polyclass::archgeo::{arch_newton, cone_member, ArchNewton, Cone, ConeSpec, ConeVerdict};
use polyclass::discriminant::{discriminant_value, symbolic_discriminant_cached, SymbolicPoly};
use polyclass::multiplier::{ms_check as core_ms_check, MsKind, MsVerdict};
use polyclass::realroots::{classify as core_classify, root_report, ClassFlags, RootReport};
use polyclass::{GammaSeq, Poly};
use serde::Serialize;

use crate::{parse_arg, to_json, CliError, Format, Rendered};

#[derive(Serialize)]
struct ClassifyReport {
    poly: Poly,
    degree: usize,
    flags: ClassFlags,
    roots: RootReport,
    arch_newton: ArchNewton,
    /// Exact discriminant as a rational string; absent below degree 2.
    discriminant: Option<String>,
    /// Cone verdicts; present only for strictly positive coefficients.
    cones: Option<ConeReport>,
}

#[derive(Serialize)]
struct ConeReport {
    log_concave: ConeVerdict,
    strengthened: ConeVerdict,
    endpoint_dominance: ConeVerdict,
}

pub fn classify(poly: &str) -> Result<Rendered, CliError> {
    let p: Poly = parse_arg(poly, "polynomial")?;
    let flags = core_classify(&p)?;
    let roots = root_report(&p)?;
    let arch = arch_newton(&p)?;
    let discriminant = match discriminant_value(&p) {
        Ok(v) => Some(v.to_string()),
        Err(polyclass::Error::DegreeTooLow { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let cones = cone_report(&p)?;
    let report = ClassifyReport {
        degree: p.degree(),
        poly: p,
        flags,
        roots,
        arch_newton: arch,
        discriminant,
        cones,
    };
    Ok(Rendered::ok(to_json(&report)?))
}

fn cone_report(p: &Poly) -> Result<Option<ConeReport>, CliError> {
    let a = p.coeffs();
    if a.len() < 2 || a.iter().any(|c| !c.is_positive()) {
        return Ok(None);
    }
    let k = p.degree();
    let verdict = |cone| cone_member(ConeSpec { cone, k }, a);
    Ok(Some(ConeReport {
        log_concave: verdict(Cone::LogConcave)?,
        strengthened: verdict(Cone::Strengthened)?,
        endpoint_dominance: verdict(Cone::EndpointDominance)?,
    }))
}

#[derive(Serialize)]
struct MsReport {
    gamma: GammaSeq,
    verdict: MsVerdict,
}

pub fn ms_check(gamma: &str, kind: MsKind) -> Result<Rendered, CliError> {
    let g: GammaSeq = parse_arg(gamma, "gamma sequence")?;
    let verdict = core_ms_check(&g, kind)?;
    Ok(Rendered::ok(to_json(&MsReport { gamma: g, verdict })?))
}

#[derive(Serialize)]
struct DiscriminantReport {
    poly: Poly,
    degree: usize,
    discriminant: String,
    is_zero: bool,
}

pub fn discriminant(poly: &str) -> Result<Rendered, CliError> {
    let p: Poly = parse_arg(poly, "polynomial")?;
    let value: BigRational = discriminant_value(&p)?;
    let report = DiscriminantReport {
        degree: p.degree(),
        poly: p,
        discriminant: value.to_string(),
        is_zero: value == BigRational::default(),
    };
    Ok(Rendered::ok(to_json(&report)?))
}

#[derive(Serialize)]
struct SymbolicReport<'a> {
    k: usize,
    nvars: usize,
    num_terms: usize,
    terms: &'a SymbolicPoly,
}

pub fn symbolic_discriminant(k: usize) -> Result<Rendered, CliError> {
    let s = symbolic_discriminant_cached(k)?;
    let report = SymbolicReport { k, nvars: s.nvars(), num_terms: s.num_terms(), terms: s };
    Ok(Rendered::ok(to_json(&report)?))
}

pub fn archnewt(poly: &str, format: Option<Format>) -> Result<Rendered, CliError> {
    let p: Poly = parse_arg(poly, "polynomial")?;
    let arch = arch_newton(&p)?;
    match format {
        None | Some(Format::Json) => Ok(Rendered::ok(to_json(&arch)?)),
        // CSV rows give the support points as exact fractions for external
        // plotting of the height function: index, |coeff| numerator, denominator.
        Some(Format::Csv) => {
            let mut body = String::from("index,numerator,denominator\n");
            for &j in &arch.support {
                let c = p.coeff(j).abs();
                body.push_str(&format!("{j},{},{}\n", c.numer(), c.denom()));
            }
            Ok(Rendered::ok(body))
        }
        Some(Format::Svg) => {
            Err(CliError::Usage("archnewt emits Json or Csv output, not Svg".into()))
        }
    }
}
