//! Line-oriented text formats for groups, G-sets, coverings and oriented
//! coverings. Comments start with `#`; blank lines are ignored.
//!
//! `.grp`   : `points <m>` then one `gen <cycles>` line per generator.
//! `.gset`  : `group <path>`, `size <n>`, one `act <one-line perm>` per
//!            generator in declaration order.
//! `.cov`   : a `.gset` body for the total space plus `pi <one-line map>`.
//! `.ocov`  : a `.cov` body plus `orient <1|2>` (label of the class of the
//!            anchor section).

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub points: usize,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSetSpec {
    pub group_ref: String,
    pub size: usize,
    pub acts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringSpec {
    pub gset: GSetSpec,
    pub pi: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSpec {
    pub covering: CoveringSpec,
    pub orient: u8,
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("expected a number, got {tok:?}")))
}

fn parse_usizes(line: usize, rest: &str) -> Result<Vec<usize>> {
    rest.split_whitespace().map(|t| parse_usize(line, t)).collect()
}

pub fn parse_group(text: &str) -> Result<GroupSpec> {
    let mut points = None;
    let mut gens = Vec::new();
    for (ln, l) in lines(text) {
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match key {
            "points" => points = Some(parse_usize(ln, rest.trim())?),
            "gen" => gens.push(rest.trim().to_string()),
            other => return Err(err(ln, format!("unexpected directive {other:?} in group file"))),
        }
    }
    let points = points.ok_or_else(|| err(0, "missing 'points' line"))?;
    // validate the cycle notation early
    for g in &gens {
        Perm::from_cycles(g, points)?;
    }
    Ok(GroupSpec { points, gens })
}

pub fn group_perms(spec: &GroupSpec) -> Result<Vec<Perm>> {
    spec.gens.iter().map(|g| Perm::from_cycles(g, spec.points)).collect()
}

pub fn write_group(spec: &GroupSpec) -> String {
    let mut out = format!("points {}\n", spec.points);
    for g in &spec.gens {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

fn parse_gset_lines<'a, I>(it: I) -> Result<(GSetSpec, Vec<(usize, &'a str, &'a str)>)>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut group_ref = None;
    let mut size = None;
    let mut acts = Vec::new();
    let mut rest_lines = Vec::new();
    for (ln, l) in it {
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match key {
            "group" => group_ref = Some(rest.trim().to_string()),
            "size" => size = Some(parse_usize(ln, rest.trim())?),
            "act" => acts.push(parse_usizes(ln, rest)?),
            _ => rest_lines.push((ln, key, rest)),
        }
    }
    let group_ref = group_ref.ok_or_else(|| err(0, "missing 'group' line"))?;
    let size = size.ok_or_else(|| err(0, "missing 'size' line"))?;
    Ok((GSetSpec { group_ref, size, acts }, rest_lines))
}

pub fn parse_gset(text: &str) -> Result<GSetSpec> {
    let (spec, rest) = parse_gset_lines(lines(text))?;
    if let Some(&(ln, key, _)) = rest.first() {
        return Err(err(ln, format!("unexpected directive {key:?} in G-set file")));
    }
    Ok(spec)
}

pub fn write_gset(spec: &GSetSpec) -> String {
    let mut out = format!("group {}\nsize {}\n", spec.group_ref, spec.size);
    for a in &spec.acts {
        let s: Vec<String> = a.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("act {}\n", s.join(" ")));
    }
    out
}

pub fn parse_covering(text: &str) -> Result<CoveringSpec> {
    let (gset, rest) = parse_gset_lines(lines(text))?;
    let mut pi = None;
    for (ln, key, val) in rest {
        match key {
            "pi" => pi = Some(parse_usizes(ln, val)?),
            other => return Err(err(ln, format!("unexpected directive {other:?} in covering file"))),
        }
    }
    let pi = pi.ok_or_else(|| err(0, "missing 'pi' line"))?;
    Ok(CoveringSpec { gset, pi })
}

pub fn write_covering(spec: &CoveringSpec) -> String {
    let mut out = write_gset(&spec.gset);
    let s: Vec<String> = spec.pi.iter().map(|p| p.to_string()).collect();
    out.push_str(&format!("pi {}\n", s.join(" ")));
    out
}

pub fn parse_oriented(text: &str) -> Result<OrientedSpec> {
    let (gset, rest) = parse_gset_lines(lines(text))?;
    let mut pi = None;
    let mut orient = None;
    for (ln, key, val) in rest {
        match key {
            "pi" => pi = Some(parse_usizes(ln, val)?),
            "orient" => {
                let v = parse_usize(ln, val.trim())?;
                if v != 1 && v != 2 {
                    return Err(err(ln, "orient must be 1 or 2"));
                }
                orient = Some(v as u8);
            }
            other => return Err(err(ln, format!("unexpected directive {other:?} in oriented covering file"))),
        }
    }
    let pi = pi.ok_or_else(|| err(0, "missing 'pi' line"))?;
    let orient = orient.ok_or_else(|| err(0, "missing 'orient' line"))?;
    Ok(OrientedSpec { covering: CoveringSpec { gset, pi }, orient })
}

pub fn write_oriented(spec: &OrientedSpec) -> String {
    let mut out = write_covering(&spec.covering);
    out.push_str(&format!("orient {}\n", spec.orient));
    out
}
