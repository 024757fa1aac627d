//! File loading: reads and digests input files, resolves group references
//! relative to the referencing file, and builds core objects.

use std::path::Path;
use std::sync::Arc;

use sha2::{Digest, Sha256};
use thinq_core::covering::{Covering, OrientedCovering};
use thinq_core::error::Error;
use thinq_core::format::{self, CoveringSpec, GroupSpec, GSetSpec};
use thinq_core::group::FiniteGroup;
use thinq_core::gset::GSet;
use thinq_core::perm::Perm;

use crate::report::Report;

/// A failed run: usage/parse problems exit 1, verification problems exit 2.
pub enum Failure {
    Usage(String),
    Verify(String),
}

/// Library errors surfacing through the CLI: malformed text is a usage
/// problem, everything else is a failed invariant.
pub fn core_failure(e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Usage(e.to_string()),
        other => Failure::Verify(other.to_string()),
    }
}

pub fn extension(path: &str) -> Result<&str, Failure> {
    Path::new(path)
        .extension()
        .and_then(|s| s.to_str())
        .ok_or_else(|| Failure::Usage(format!("{path}: missing file extension")))
}

fn read(path: &str, report: &mut Report) -> Result<String, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let digest = Sha256::digest(&bytes);
    report.add_input(path, &format!("{digest:x}"));
    String::from_utf8(bytes).map_err(|_| Failure::Usage(format!("{path}: not valid UTF-8")))
}

fn sibling(path: &str, reference: &str) -> String {
    let r = Path::new(reference);
    if r.is_absolute() {
        return reference.to_string();
    }
    Path::new(path)
        .parent()
        .unwrap_or_else(|| Path::new(""))
        .join(r)
        .to_string_lossy()
        .into_owned()
}

pub fn load_group(path: &str, report: &mut Report) -> Result<(GroupSpec, Arc<FiniteGroup>), Failure> {
    let text = read(path, report)?;
    let spec = format::parse_group(&text).map_err(core_failure)?;
    let perms = format::group_perms(&spec).map_err(core_failure)?;
    let group = FiniteGroup::from_generators(spec.points, perms).map_err(core_failure)?;
    Ok((spec, group))
}

fn build_gset(spec: &GSetSpec, path: &str, report: &mut Report) -> Result<GSet, Failure> {
    let (_, group) = load_group(&sibling(path, &spec.group_ref), report)?;
    if spec.acts.len() != group.generators().len() {
        return Err(Failure::Usage(format!(
            "{path}: {} act lines for {} group generators",
            spec.acts.len(),
            group.generators().len()
        )));
    }
    let images: Vec<Perm> = spec
        .acts
        .iter()
        .map(|a| Perm::from_images(a.clone()))
        .collect::<Result<_, _>>()
        .map_err(core_failure)?;
    GSet::from_generator_images(group, spec.size, images).map_err(core_failure)
}

pub fn load_gset(path: &str, report: &mut Report) -> Result<(GSetSpec, GSet), Failure> {
    let text = read(path, report)?;
    let spec = format::parse_gset(&text).map_err(core_failure)?;
    let gset = build_gset(&spec, path, report)?;
    Ok((spec, gset))
}

pub fn load_covering(path: &str, report: &mut Report) -> Result<(CoveringSpec, Covering), Failure> {
    let text = read(path, report)?;
    let spec = format::parse_covering(&text).map_err(core_failure)?;
    let total = build_gset(&spec.gset, path, report)?;
    let cov = Covering::from_total(total, spec.pi.clone()).map_err(core_failure)?;
    Ok((spec, cov))
}

pub fn load_oriented(
    path: &str,
    report: &mut Report,
) -> Result<(format::OrientedSpec, OrientedCovering), Failure> {
    let text = read(path, report)?;
    let spec = format::parse_oriented(&text).map_err(core_failure)?;
    let total = build_gset(&spec.covering.gset, path, report)?;
    let cov = Covering::from_total(total, spec.covering.pi.clone()).map_err(core_failure)?;
    let oc = OrientedCovering::orient(&cov, Some(spec.orient))
        .map_err(core_failure)?
        .ok_or_else(|| Failure::Verify(format!("{path}: covering is not orientable")))?;
    Ok((spec, oc))
}

/// The G-set serialized back to its text form: one `act` line per group
/// generator in declaration order.
pub fn spec_of_gset(x: &GSet, group_ref: &str) -> GSetSpec {
    let acts = x
        .group()
        .generators()
        .iter()
        .map(|&g| x.action_of(g).images().to_vec())
        .collect();
    GSetSpec { group_ref: group_ref.to_string(), size: x.size(), acts }
}

pub fn spec_of_covering(c: &Covering, group_ref: &str) -> CoveringSpec {
    CoveringSpec { gset: spec_of_gset(c.total(), group_ref), pi: c.pi().to_vec() }
}
