//! Command-line front end: parses the text formats, dispatches to the
//! library, and emits deterministic human-readable or JSON reports.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 verification failure.
//! Human-readable reports prefix all metadata with `#`, so any object body
//! they contain re-parses as a valid format file.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod load;
mod report;

use crate::load::{load_covering, load_gset, load_group, load_oriented, Failure};
use crate::report::Report;

#[derive(Parser)]
#[command(name = "thinq", version, about = "thin quadrics: coverings, Clifford sets, triality")]
struct Cli {
    /// Emit the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a .grp, .gset, .cov or .ocov file.
    Verify { file: String },
    /// List the 2^n sections of a double covering.
    Clifford { file: String },
    /// The two discriminant classes, the sign action and orientability.
    Discriminant { file: String },
    /// Orient a double covering; fails when the discriminant classes are swapped.
    Orient {
        file: String,
        /// Label of the class of the anchor section (mask 0).
        #[arg(long, default_value_t = 1)]
        label: u8,
    },
    /// The oriented covering of 2-subsets of a 4-element G-set (A3=D3, forward).
    Gr1 { file: String },
    /// The 4-element G-set recovered from an oriented 6/3 covering (A3=D3, inverse).
    C1 { file: String },
    /// Iterate the triality functor C1+ on an oriented D4 object.
    Triality {
        file: String,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Decide isomorphism of two objects of the same kind.
    Iso { left: String, right: String },
    /// All isomorphism classes of G-sets of a size, or of double coverings of a base size.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "gsets", value_parser = ["gsets", "coverings"])]
        kind: String,
    },
    /// Verify the split Clifford-algebra lemmas on a trivial-group covering.
    Algebra { file: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap wants exit code 2 for usage errors; the contract here is 1
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Verify { file } => commands::verify(file),
        Command::Clifford { file } => commands::clifford(file),
        Command::Discriminant { file } => commands::discriminant(file),
        Command::Orient { file, label } => commands::orient(file, *label),
        Command::Gr1 { file } => commands::gr1(file),
        Command::C1 { file } => commands::c1(file),
        Command::Triality { file, steps } => commands::triality(file, *steps),
        Command::Iso { left, right } => commands::iso(left, right),
        Command::Classify { group, size, kind } => commands::classify(group, *size, kind),
        Command::Algebra { file } => commands::algebra(file),
    }
}

mod commands {
    use super::*;
    use serde_json::json;
    use thinq_core::algebra::{product_compatibility_check, CliffordAlgebraSplit, MAX_TENSOR_BASE};
    use thinq_core::covering::{classify_coverings, iso_coverings, iso_oriented, CliffordSet};
    use thinq_core::d4;
    use thinq_core::format::{write_covering, write_gset, write_oriented, OrientedSpec};
    use thinq_core::gset::{classify_gsets, is_isomorphic};
    use thinq_core::Rat;

    use crate::load::{core_failure, spec_of_covering, spec_of_gset};

    pub fn verify(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("verify");
        match load::extension(file)? {
            "grp" => {
                let (_, g) = load_group(file, &mut r)?;
                r.kv("type", "group");
                r.kv("order", g.order());
                r.kv("degree", g.degree());
            }
            "gset" => {
                let (_, x) = load_gset(file, &mut r)?;
                r.kv("type", "gset");
                r.kv("group order", x.group().order());
                r.kv("size", x.size());
                r.kv("orbits", x.orbits().len());
            }
            "cov" => {
                let (_, c) = load_covering(file, &mut r)?;
                r.kv("type", "covering");
                r.kv("group order", c.total().group().order());
                r.kv("total size", c.total().size());
                r.kv("base size", c.base_size());
                r.kv("degree", c.degree());
            }
            "ocov" => {
                let (_, oc) = load_oriented(file, &mut r)?;
                r.kv("type", "oriented covering");
                r.kv("base size", oc.n());
                r.kv("anchor label", oc.anchor_label());
            }
            other => {
                return Err(Failure::Usage(format!("unknown file extension {other:?}")));
            }
        }
        r.line("ok");
        r.set_json(json!({ "ok": true }));
        Ok(r)
    }

    pub fn clifford(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("clifford");
        let (_, cov) = load_covering(file, &mut r)?;
        let cs = CliffordSet::new(&cov).map_err(core_failure)?;
        r.kv("n", cs.n());
        r.kv("sections", cs.len());
        let d = cs.discriminant();
        r.kv("class sizes", format!("{} {}", d.classes[0].len(), d.classes[1].len()));
        let orbits = cs.gset().orbits();
        r.kv("orbits", orbits.len());
        for orbit in &orbits {
            let s: Vec<String> = orbit.iter().map(|m| m.to_string()).collect();
            r.line(format!("orbit: masks {}", s.join(" ")));
        }
        let mut sections = Vec::new();
        for m in 0..cs.len() {
            let pts = cs.section_points(m);
            let pts_s: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
            r.line(format!("section {m}: points {} class {}", pts_s.join(" "), cs.class_of(m)));
            sections.push(json!({ "mask": m, "points": pts, "class": cs.class_of(m) }));
        }
        r.set_json(json!({
            "n": cs.n(),
            "sections": sections,
            "orbits": orbits,
            "class_sizes": [d.classes[0].len(), d.classes[1].len()],
        }));
        Ok(r)
    }

    pub fn discriminant(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("discriminant");
        let (_, cov) = load_covering(file, &mut r)?;
        let cs = CliffordSet::new(&cov).map_err(core_failure)?;
        let d = cs.discriminant();
        for (i, class) in d.classes.iter().enumerate() {
            let s: Vec<String> = class.iter().map(|m| m.to_string()).collect();
            r.line(format!("class {i}: masks {}", s.join(" ")));
        }
        let swaps: Vec<String> = d.swaps.iter().map(|&b| u8::from(b).to_string()).collect();
        r.kv("swaps", swaps.join(" "));
        r.kv("orientable", d.is_orientable());
        r.set_json(json!({
            "classes": d.classes,
            "swaps": d.swaps,
            "orientable": d.is_orientable(),
        }));
        Ok(r)
    }

    pub fn orient(file: &str, label: u8) -> Result<Report, Failure> {
        if label != 1 && label != 2 {
            return Err(Failure::Usage("label must be 1 or 2".into()));
        }
        let mut r = Report::new("orient");
        let (spec, cov) = load_covering(file, &mut r)?;
        let oc = thinq_core::covering::OrientedCovering::orient(&cov, Some(label))
            .map_err(core_failure)?
            .ok_or_else(|| Failure::Verify("covering is not orientable".into()))?;
        let out = OrientedSpec { covering: spec, orient: oc.anchor_label() };
        r.body(write_oriented(&out));
        r.set_json(json!({ "oriented": write_oriented(&out) }));
        Ok(r)
    }

    pub fn gr1(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("gr1");
        let (spec, x) = load_gset(file, &mut r)?;
        let oc = d4::gr1(&x).map_err(core_failure)?;
        let out = OrientedSpec {
            covering: spec_of_covering(oc.covering(), &spec.group_ref),
            orient: oc.anchor_label(),
        };
        r.body(write_oriented(&out));
        r.set_json(json!({ "oriented": write_oriented(&out) }));
        Ok(r)
    }

    pub fn c1(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("c1");
        let (spec, oc) = load_oriented(file, &mut r)?;
        let x = d4::c1_inverse_gr1(&oc).map_err(core_failure)?;
        let out = spec_of_gset(&x, &spec.covering.gset.group_ref);
        r.body(write_gset(&out));
        r.set_json(json!({ "gset": write_gset(&out) }));
        Ok(r)
    }

    pub fn triality(file: &str, steps: usize) -> Result<Report, Failure> {
        let mut r = Report::new("triality");
        let (spec, oc) = load_oriented(file, &mut r)?;
        let orbit = d4::triality_orbit(&oc, steps).map_err(core_failure)?;
        let group_ref = &spec.covering.gset.group_ref;
        let mut step_bodies = Vec::new();
        for (i, obj) in orbit.iter().enumerate() {
            let out = OrientedSpec {
                covering: spec_of_covering(obj.covering(), group_ref),
                orient: obj.anchor_label(),
            };
            r.comment(format!("step {i}"));
            r.body(write_oriented(&out));
            step_bodies.push(write_oriented(&out));
        }
        let len = d4::triality_orbit_length(&oc).map_err(core_failure)?;
        r.comment(format!("orbit length {len}"));
        let mut witnesses = Vec::new();
        for (i, obj) in orbit.iter().enumerate().skip(1) {
            if let Some(w) = iso_oriented(&oc, obj).map_err(core_failure)? {
                r.comment(format!(
                    "step {i} isomorphic to step 0: total map {}",
                    w.total_map.map.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
                ));
                witnesses.push(json!({ "step": i, "total_map": w.total_map.map, "base_map": w.base_map.map }));
            }
        }
        r.set_json(json!({
            "steps": step_bodies,
            "orbit_length": len,
            "isomorphic_to_start": witnesses,
        }));
        Ok(r)
    }

    pub fn iso(left: &str, right: &str) -> Result<Report, Failure> {
        let mut r = Report::new("iso");
        let ext = load::extension(left)?;
        if ext != load::extension(right)? {
            return Err(Failure::Usage("both files must have the same extension".into()));
        }
        let (found, total_map, base_map) = match ext {
            "gset" => {
                let (_, a) = load_gset(left, &mut r)?;
                let (_, b) = load_gset(right, &mut r)?;
                match is_isomorphic(&a, &b).map_err(core_failure)? {
                    Some(w) => (true, Some(w.map), None),
                    None => (false, None, None),
                }
            }
            "cov" => {
                let (_, a) = load_covering(left, &mut r)?;
                let (_, b) = load_covering(right, &mut r)?;
                match iso_coverings(&a, &b).map_err(core_failure)? {
                    Some(w) => (true, Some(w.total_map.map), Some(w.base_map.map)),
                    None => (false, None, None),
                }
            }
            "ocov" => {
                let (_, a) = load_oriented(left, &mut r)?;
                let (_, b) = load_oriented(right, &mut r)?;
                match iso_oriented(&a, &b).map_err(core_failure)? {
                    Some(w) => (true, Some(w.total_map.map), Some(w.base_map.map)),
                    None => (false, None, None),
                }
            }
            other => {
                return Err(Failure::Usage(format!("iso does not apply to .{other} files")));
            }
        };
        r.kv("isomorphic", found);
        if let Some(m) = &total_map {
            r.kv("map", m.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
        }
        if let Some(m) = &base_map {
            r.kv("base map", m.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
        }
        r.set_json(json!({ "isomorphic": found, "map": total_map, "base_map": base_map }));
        Ok(r)
    }

    pub fn classify(group: &str, size: usize, kind: &str) -> Result<Report, Failure> {
        let mut r = Report::new("classify");
        let (_, g) = load_group(group, &mut r)?;
        let mut bodies = Vec::new();
        match kind {
            "gsets" => {
                let classes = classify_gsets(&g, size).map_err(core_failure)?;
                r.comment(format!("classes: {}", classes.len()));
                for (i, x) in classes.iter().enumerate() {
                    r.comment(format!("class {} of {}", i + 1, classes.len()));
                    let body = write_gset(&spec_of_gset(x, group));
                    r.body(body.clone());
                    bodies.push(body);
                }
            }
            "coverings" => {
                let classes = classify_coverings(&g, size).map_err(core_failure)?;
                r.comment(format!("classes: {}", classes.len()));
                for (i, c) in classes.iter().enumerate() {
                    r.comment(format!("class {} of {}", i + 1, classes.len()));
                    let body = write_covering(&spec_of_covering(c, group));
                    r.body(body.clone());
                    bodies.push(body);
                }
            }
            _ => return Err(Failure::Usage("kind must be gsets or coverings".into())),
        }
        r.set_json(json!({ "count": bodies.len(), "classes": bodies }));
        Ok(r)
    }

    pub fn algebra(file: &str) -> Result<Report, Failure> {
        let mut r = Report::new("algebra");
        let (_, cov) = load_covering(file, &mut r)?;
        let a: CliffordAlgebraSplit<Rat> = CliffordAlgebraSplit::new(&cov).map_err(core_failure)?;
        let mut all_pass = true;
        r.kv("dimension", format!("2^{} = {}", a.n(), a.dim()));

        // closed form of c_L vs the tensor expansion, on the point basis
        let mut closed_form = true;
        for y in 0..cov.total().size() {
            let mut x = vec![thinq_core::rat(0); cov.total().size()];
            x[y] = thinq_core::rat(1);
            if a.c_map(&x).is_err() {
                closed_form = false;
            }
        }
        all_pass &= closed_form;
        r.kv("c_map closed form", if closed_form { "pass" } else { "FAIL" });

        let kernel = a.kernel_check().map_err(core_failure)?;
        all_pass &= kernel.passed;
        r.kv(
            "kernel",
            format!(
                "dim {} expected {} {}",
                kernel.kernel_dim,
                kernel.expected_dim,
                if kernel.passed { "pass" } else { "FAIL" }
            ),
        );
        for v in &kernel.trace_zero_basis {
            let s: Vec<String> = v.iter().map(|q| q.to_string()).collect();
            r.line(format!("trace-zero basis vector: {}", s.join(" ")));
        }

        let generation = a.generation_check().map_err(core_failure)?;
        all_pass &= generation.passed;
        r.kv(
            "generation",
            format!(
                "reached dim {} of {} in {} rounds {}",
                generation.reached_dim,
                generation.expected_dim,
                generation.rounds,
                if generation.passed { "pass" } else { "FAIL" }
            ),
        );

        let product = if 2 * a.n() <= MAX_TENSOR_BASE {
            let rep = product_compatibility_check::<Rat>(&cov, &cov).map_err(core_failure)?;
            all_pass &= rep.passed;
            r.kv(
                "product with self",
                format!("{} elements {}", rep.checked_elements, if rep.passed { "pass" } else { "FAIL" }),
            );
            Some(rep.passed)
        } else {
            r.kv("product with self", "skipped (union base size above tensor limit)");
            None
        };

        r.set_json(json!({
            "dimension": a.dim(),
            "c_map_closed_form": closed_form,
            "kernel": { "dim": kernel.kernel_dim, "expected": kernel.expected_dim, "passed": kernel.passed },
            "generation": { "reached": generation.reached_dim, "expected": generation.expected_dim, "rounds": generation.rounds, "passed": generation.passed },
            "product_with_self": product,
            "passed": all_pass,
        }));
        if !all_pass {
            // print the report first so the failure is inspectable
            print!("{}", r.render(false));
            return Err(Failure::Verify("an algebra lemma check failed".into()));
        }
        Ok(r)
    }
}
