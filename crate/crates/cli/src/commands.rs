//! Command-line definition and the subcommands.

use std::path::{Path, PathBuf};

use brt_core::linalg::primitive_vector;
use brt_core::verify::{is_resolution, minimize, ExactnessReport};
use brt_core::{format_face, relabel, scarf, scarf_system, taylor, Error, GradedComplex, LcmLattice, Morphism, Multidegree, Scalar};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{parse_map, to_canonical_json, ComplexFile, MorphismFile, FORMAT_VERSION};
use crate::render;
use crate::{Failure, EXIT_NEGATIVE, EXIT_OK};

#[derive(Parser, Debug)]
#[command(name = "brt", version, about = "Taylor and Scarf complexes of multigraded morphisms over exact fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Taylor,
    Scarf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a morphism file.
    Validate { file: PathBuf },
    /// Rank, genericity, LCM-lattice, Scarf faces, face data and the Scarf system.
    Analyze { file: PathBuf },
    /// Build the Taylor complex of a morphism.
    Taylor { file: PathBuf },
    /// Build the Scarf complex of a morphism.
    Scarf { file: PathBuf },
    /// Check that a complex is an exact resolution, degree by degree. Given a
    /// morphism file, checks the complex selected by `--complex`.
    Verify {
        file: PathBuf,
        /// Also require the complex to be minimal.
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = Which::Taylor)]
        complex: Which,
    },
    /// Cancel unit entries until the complex is minimal.
    Minimize { file: PathBuf },
    /// Relabel a complex along a degree map onto a target morphism.
    Relabel { map: PathBuf, complex: PathBuf, target: PathBuf },
}

/// The rendered report and the exit code it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: u8,
    pub body: String,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn load_morphism(path: &Path) -> Result<Morphism, Failure> {
    MorphismFile::parse(&read(path)?)?.to_morphism()
}

fn load_complex(path: &Path) -> Result<(GradedComplex, Vec<String>), Failure> {
    let file = ComplexFile::parse(&read(path)?)?;
    let x = file.to_complex()?;
    Ok((x, file.vars))
}

fn degree_json(d: &Multidegree) -> Value {
    json!(d.coords())
}

fn face_json(face: &[usize]) -> Value {
    json!(face.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn vector_json(v: &[Scalar]) -> Value {
    json!(primitive_vector(v).iter().map(Scalar::to_string).collect::<Vec<_>>())
}

fn vector_text(v: &[Scalar], symbol: &str) -> String {
    let v = primitive_vector(v);
    let mut out = String::new();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let term = format!("{symbol}{}", i + 1);
        let piece = if c.is_one() {
            term
        } else if c.is_minus_one() {
            format!("-{term}")
        } else {
            format!("{c}{term}")
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(&format!(" - {rest}"));
        } else {
            out.push_str(&format!(" + {piece}"));
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn finish(output: OutputFormat, value: Value, text: String, code: u8) -> Report {
    let body = match output {
        OutputFormat::Json => to_canonical_json(&value),
        OutputFormat::Text => text,
    };
    Report { code, body }
}

fn validate(phi: &Morphism, output: OutputFormat) -> Report {
    let zero: Vec<usize> = phi.zero_columns().iter().map(|j| j + 1).collect();
    let vars = render::vars_or_default(phi.vars(), phi.n());
    let warnings: Vec<String> =
        zero.iter().map(|j| format!("column {j} is zero, so the morphism is not a minimal presentation")).collect();
    let value = json!({
        "format_version": FORMAT_VERSION,
        "valid": true,
        "field": phi.field().name(),
        "n": phi.n(),
        "g": phi.g(),
        "e": phi.e(),
        "rank": phi.rank(),
        "zero_columns": zero,
        "warnings": warnings,
    });
    let mut text = format!(
        "valid: {}x{} morphism over {} in {} variables, rank {}\n",
        phi.g(),
        phi.e(),
        phi.field().name(),
        phi.n(),
        phi.rank()
    );
    text.push_str(&render::morphism_matrix(phi, &vars));
    for w in &warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    finish(output, value, text, if zero.is_empty() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn analyze(phi: &Morphism, output: OutputFormat) -> Result<Report, Failure> {
    let lat = LcmLattice::of(phi).map_err(Failure::from_core)?;
    let cd = phi.coeff_data();
    let witness = phi.combinatorial_genericity_witness();
    let mr_witness = phi.maximal_rank_witness().map_err(Failure::from_core)?;
    let degrees = |ds: &[Multidegree]| ds.iter().map(degree_json).collect::<Vec<_>>();

    let mut face_rows = Vec::new();
    let mut text_faces = String::new();
    for a in lat.elements() {
        let fd = lat.face_data(a).map_err(Failure::from_core)?;
        let k = cd.k_space(&fd.upper);
        let k_vectors: Vec<Value> = k.vectors().map(vector_json).collect();
        let k_text: Vec<String> = k.vectors().map(|v| vector_text(v, "υ")).collect();
        face_rows.push(json!({
            "degree": degree_json(a),
            "scarf": lat.face_count(a) == 1,
            "columns_leq": face_json(&fd.columns_leq),
            "meet": face_json(&fd.meet),
            "upper": face_json(&fd.upper),
            "k_space": k_vectors,
        }));
        text_faces.push_str(&format!(
            "  {}  I_a={}  I(a)={}  I^a={}  K={}\n",
            a,
            format_face(&fd.columns_leq),
            format_face(&fd.meet),
            format_face(&fd.upper),
            if k_text.is_empty() { "0".to_string() } else { format!("span{{{}}}", k_text.join(", ")) }
        ));
    }

    let sys = scarf_system(phi).map_err(Failure::from_core)?;
    let mut system_rows = Vec::new();
    let mut text_system = String::new();
    for (face, space) in sys.iter() {
        let basis: Vec<Value> = space.vectors().map(vector_json).collect();
        system_rows.push(json!({ "face": face_json(face), "dim": space.dim(), "ambient_dim": space.ambient_dim(), "basis": basis }));
        text_system.push_str(&format!("  F_{}: dim {} of {}\n", format_face(face), space.dim(), space.ambient_dim()));
    }

    let scarf_faces = lat.scarf_faces();
    let value = json!({
        "format_version": FORMAT_VERSION,
        "field": phi.field().name(),
        "n": phi.n(),
        "g": phi.g(),
        "e": phi.e(),
        "rank": cd.rank,
        "uniform_rank": phi.is_uniform_rank(),
        "combinatorially_generic": witness.is_none(),
        "genericity_witness": witness.map(|(i, j)| json!([i + 1, j + 1])),
        "generic": phi.is_generic(),
        "maximal_rank_everywhere": mr_witness.is_none(),
        "maximal_rank_witness": mr_witness.as_ref().map(degree_json),
        "zero_columns": phi.zero_columns().iter().map(|j| j + 1).collect::<Vec<_>>(),
        "lattice": {
            "elements": degrees(lat.elements()),
            "scarf_part": degrees(lat.scarf_part()),
            "nonscarf_part": degrees(lat.nonscarf_part()),
        },
        "scarf_faces": scarf_faces.iter().map(|f| face_json(f)).collect::<Vec<_>>(),
        "face_data": face_rows,
        "scarf_system": system_rows,
    });

    let list = |ds: &[Multidegree]| ds.iter().map(Multidegree::to_string).collect::<Vec<_>>().join(" ");
    let mut text = format!("rank: {}\n", cd.rank);
    text.push_str(&format!("uniform rank: {}\n", phi.is_uniform_rank()));
    text.push_str(&format!("combinatorially generic: {}\n", witness.is_none()));
    if let Some((i, j)) = witness {
        text.push_str(&format!("  violated by columns {} and {}\n", i + 1, j + 1));
    }
    text.push_str(&format!("generic: {}\n", phi.is_generic()));
    text.push_str(&format!("maximal rank everywhere: {}\n", mr_witness.is_none()));
    if let Some(a) = &mr_witness {
        text.push_str(&format!("  fails at {a}\n"));
    }
    text.push_str(&format!("LCM-lattice ({}): {}\n", lat.elements().len(), list(lat.elements())));
    text.push_str(&format!("  Scarf part ({}): {}\n", lat.scarf_part().len(), list(lat.scarf_part())));
    text.push_str(&format!("  non-Scarf part ({}): {}\n", lat.nonscarf_part().len(), list(lat.nonscarf_part())));
    let faces: Vec<String> = scarf_faces.iter().map(|f| format_face(f)).collect();
    text.push_str(&format!("Scarf faces ({}): {}\n", faces.len(), faces.join(" ")));
    text.push_str("face data:\n");
    text.push_str(&text_faces);
    text.push_str("Scarf system:\n");
    text.push_str(&text_system);
    Ok(finish(output, value, text, EXIT_OK))
}

fn complex_report(x: &GradedComplex, vars: &[String], n: usize, output: OutputFormat) -> Report {
    let vars = render::vars_or_default(vars, n);
    let file = ComplexFile::from_complex(x, &vars);
    let body = match output {
        OutputFormat::Json => to_canonical_json(&file),
        OutputFormat::Text => render::complex(x, &vars),
    };
    Report { code: EXIT_OK, body }
}

fn verify_report(report: &ExactnessReport, require_minimal: bool, output: OutputFormat) -> Report {
    let ok = report.is_exact() && (!require_minimal || report.minimal);
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({ "degree": degree_json(&f.degree), "position": f.position, "dimension": f.dimension }))
        .collect();
    let value = json!({
        "format_version": FORMAT_VERSION,
        "is_complex": report.is_complex,
        "homogeneous": report.homogeneous,
        "exact": report.is_exact(),
        "minimal": report.minimal,
        "tested_degrees": report.tested_degrees.len(),
        "failures": failures,
    });
    let mut text = format!("exact: {}, minimal: {}\n", report.is_exact(), report.minimal);
    if !report.is_complex {
        text.push_str("differentials do not compose to zero\n");
    }
    for f in &report.failures {
        text.push_str(&format!("homology of dimension {} at position {} in degree {}\n", f.dimension, f.position, f.degree));
    }
    finish(output, value, text, if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn is_complex_file(text: &str) -> bool {
    serde_json::from_str::<Value>(text).ok().and_then(|v| v.get("levels").map(|_| ())).is_some()
}

fn relabel_failure(e: Error) -> Failure {
    match e {
        Error::NegativeShift { .. } | Error::QeIncompatible { .. } | Error::MissingKey(_) | Error::Dimension { .. } => {
            Failure::new(EXIT_NEGATIVE, e.to_string())
        }
        Error::FieldMismatch => Failure::from_core_input(e),
        _ => Failure::from_core(e),
    }
}

/// Runs one command and renders its report.
pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let output = cli.output;
    match &cli.command {
        Command::Validate { file } => Ok(validate(&load_morphism(file)?, output)),
        Command::Analyze { file } => analyze(&load_morphism(file)?, output),
        Command::Taylor { file } => {
            let phi = load_morphism(file)?;
            let x = taylor(&phi).map_err(Failure::from_core)?;
            Ok(complex_report(&x, phi.vars(), phi.n(), output))
        }
        Command::Scarf { file } => {
            let phi = load_morphism(file)?;
            let x = scarf(&phi).map_err(Failure::from_core)?;
            Ok(complex_report(&x, phi.vars(), phi.n(), output))
        }
        Command::Verify { file, minimal, complex } => {
            let text = read(file)?;
            let x = if is_complex_file(&text) {
                ComplexFile::parse(&text)?.to_complex()?
            } else {
                let phi = MorphismFile::parse(&text)?.to_morphism()?;
                match complex {
                    Which::Taylor => taylor(&phi),
                    Which::Scarf => scarf(&phi),
                }
                .map_err(Failure::from_core)?
            };
            Ok(verify_report(&is_resolution(&x), *minimal, output))
        }
        Command::Minimize { file } => {
            let (x, vars) = load_complex(file)?;
            Ok(complex_report(&minimize(&x), &vars, x.n(), output))
        }
        Command::Relabel { map, complex, target } => {
            let f = parse_map(&read(map)?)?;
            let (x, _) = load_complex(complex)?;
            let phi2 = load_morphism(target)?;
            let y = relabel::relabel(&f, &x, &phi2).map_err(relabel_failure)?;
            Ok(complex_report(&y, phi2.vars(), phi2.n(), output))
        }
    }
}
