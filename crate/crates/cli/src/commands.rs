use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use a2web::growth::{dim_inv, enumerate_diagrams, GrowthDiagram, TypeWord};
use a2web::hulls::{conv, induced_complex, maxconv, minconv, VertexSet};
use a2web::io::{lattices_to_json, parse_lattices, FieldSpec, LatticeList, NamedField};
use a2web::series::{Fp, Rational};
use a2web::synthesis::{cross_validate, diskoid_from_diagram, realize_polygon};
use a2web::webs::{dualize, reduce, web_to_dot, web_to_tikz, Diskoid, Web};
use a2web::Lattice;
use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Command, FieldArg, Format};

/// The random stream for one component: the base seed picks the key and
/// the component index picks the ChaCha stream, so results do not depend
/// on which thread runs which component.
fn component_rng(seed: u64, component: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(component as u64);
    rng
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn emit_web(web: &Web, format: Format) -> String {
    match format {
        Format::Json => to_json(web) + "\n",
        Format::Dot => web_to_dot(web),
        Format::Tikz => web_to_tikz(web),
    }
}

fn web_of(d: &GrowthDiagram) -> Result<Web> {
    Ok(dualize(&diskoid_from_diagram(d)?)?)
}

pub fn run(command: Command) -> Result<ExitCode> {
    let mut out = std::io::stdout().lock();
    match command {
        Command::Dim { word } => writeln!(out, "{}", dim_inv(&word))?,
        Command::Diagrams { word, count, json } => {
            let diagrams = enumerate_diagrams(&word)?;
            if count {
                writeln!(out, "{}", diagrams.len())?;
            } else if json {
                writeln!(out, "{}", to_json(&diagrams))?;
            } else {
                for (i, d) in diagrams.iter().enumerate() {
                    writeln!(out, "# component {i}\n{}\n", d.to_text())?;
                }
            }
        }
        Command::Webs { word, format, out: dir } => {
            let diagrams = enumerate_diagrams(&word)?;
            let webs: Vec<Web> = diagrams.par_iter().map(web_of).collect::<Result<_>>()?;
            match dir {
                Some(dir) => {
                    fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;
                    for (i, web) in webs.iter().enumerate() {
                        let path = dir.join(format!("{word}-{i}.{}", format.extension()));
                        fs::write(&path, emit_web(web, format))
                            .with_context(|| format!("cannot write {}", path.display()))?;
                        writeln!(out, "{}", path.display())?;
                    }
                }
                None if format == Format::Json => writeln!(out, "{}", to_json(&webs))?,
                None => {
                    for (i, web) in webs.iter().enumerate() {
                        let comment = if format == Format::Dot { "//" } else { "%" };
                        write!(out, "{comment} component {i}\n{}", emit_web(web, format))?;
                    }
                }
            }
        }
        Command::Dualize { file, format } => {
            let diskoid: Diskoid = serde_json::from_str(&read(&file)?).context("not a diskoid")?;
            write!(out, "{}", emit_web(&dualize(&diskoid)?, format))?;
        }
        Command::Reduce { file } => {
            let web: Web = serde_json::from_str(&read(&file)?).context("not a web")?;
            writeln!(out, "{}", to_json(&reduce(&web)))?;
        }
        Command::Promote { file } => {
            let d: GrowthDiagram = serde_json::from_str(&read(&file)?).context("not a growth diagram")?;
            writeln!(out, "{}", to_json(&d.promoted()))?;
        }
        Command::Distance { file, i, j } => {
            let lattices = parse_lattices(&read(&file)?)?;
            if i >= lattices.len() || j >= lattices.len() {
                bail!("indices {i}, {j} out of range for {} lattices", lattices.len());
            }
            let d = match &lattices {
                LatticeList::Rational(ls) => ls[i].class().distance(&ls[j].class()),
                LatticeList::Prime(_, ls) => ls[i].class().distance(&ls[j].class()),
            };
            writeln!(out, "{d}")?;
        }
        Command::Hull { min, max, dot, file, .. } => {
            let kind = if min { HullChoice::Min } else if max { HullChoice::Max } else { HullChoice::Conv };
            let text = match parse_lattices(&read(&file)?)? {
                LatticeList::Rational(ls) => hull_output(&ls, kind, dot)?,
                LatticeList::Prime(_, ls) => hull_output(&ls, kind, dot)?,
            };
            write!(out, "{text}")?;
        }
        Command::Realize { word, component, seed, field, p, max_retries } => {
            let diagrams = enumerate_diagrams(&word)?;
            let Some(d) = diagrams.get(component) else {
                bail!("component {component} out of range: {word} has {} diagrams", diagrams.len());
            };
            let mut rng = component_rng(seed, component);
            let json = match field {
                FieldArg::Q => realized_json::<Rational>(d, &(), &mut rng, max_retries)?,
                FieldArg::Fp => {
                    let FieldSpec::Prime(p) = FieldSpec::prime(p)? else { unreachable!() };
                    realized_json::<Fp>(d, &p, &mut rng, max_retries)?
                }
            };
            writeln!(out, "{}", to_json(&json))?;
        }
        Command::Verify { word, geometric, max_retries, seed } => {
            return verify(&word, geometric, max_retries, seed, &mut out);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy)]
enum HullChoice {
    Min,
    Max,
    Conv,
}

fn hull_output<F: NamedField>(lattices: &[Lattice<F>], kind: HullChoice, dot: bool) -> Result<String> {
    let seed: VertexSet<F> = lattices.iter().map(Lattice::class).collect();
    let hull = match kind {
        HullChoice::Min => minconv(&seed)?,
        HullChoice::Max => maxconv(&seed)?,
        HullChoice::Conv => conv(&seed)?,
    };
    let complex = induced_complex(&hull);
    if dot {
        return Ok(complex.to_dot());
    }
    let classes: Vec<Lattice<F>> = complex.vertices.iter().map(|c| c.lattice().clone()).collect();
    let value = serde_json::json!({ "classes": lattices_to_json(&classes), "complex": complex.to_json() });
    Ok(to_json(&value) + "\n")
}

fn realized_json<F: NamedField>(
    d: &GrowthDiagram,
    ctx: &F::Ctx,
    rng: &mut ChaCha8Rng,
    max_retries: usize,
) -> Result<serde_json::Value> {
    let polygon = realize_polygon::<F, _>(d, ctx, rng, max_retries)?;
    let lattices: Vec<Lattice<F>> = polygon.classes().iter().map(|c| c.lattice().clone()).collect();
    Ok(lattices_to_json(&lattices))
}

/// One line per component, then the counting identity.
fn verify(word: &TypeWord, geometric: bool, max_retries: usize, seed: u64, out: &mut impl Write) -> Result<ExitCode> {
    let diagrams = enumerate_diagrams(word)?;
    let results: Vec<(Result<()>, Option<Web>)> = diagrams
        .par_iter()
        .enumerate()
        .map(|(i, d)| {
            let mut web = None;
            let check = (|| -> Result<()> {
                let diskoid = diskoid_from_diagram(d)?;
                if !diskoid.is_cat0() {
                    bail!("diskoid has an interior vertex of degree below 6");
                }
                let w = dualize(&diskoid)?;
                if !w.is_nonelliptic() {
                    bail!("web has an internal face with fewer than 6 sides");
                }
                if w.type_word().as_ref() != Some(word) {
                    bail!("web boundary does not read {word}");
                }
                web = Some(w);
                if geometric {
                    let p = a2web::series::DEFAULT_PRIME;
                    if !cross_validate::<Fp, _>(d, &p, &mut component_rng(seed, i), max_retries)? {
                        bail!("hull complex of the realized polygon differs from the diskoid");
                    }
                }
                Ok(())
            })();
            (check, web)
        })
        .collect();
    let mut failed = 0;
    for (i, (check, _)) in results.iter().enumerate() {
        match check {
            Ok(()) => writeln!(out, "PASS component {i}")?,
            Err(e) => {
                failed += 1;
                writeln!(out, "FAIL component {i}: {e:#}")?;
            }
        }
    }
    let webs: Vec<&Web> = results.iter().filter_map(|(_, w)| w.as_ref()).collect();
    let distinct: std::collections::BTreeSet<_> = webs.iter().map(|w| w.canonical_key()).collect();
    let dim = dim_inv(word);
    let counts_ok = diagrams.len() as u64 == dim && distinct.len() == diagrams.len();
    let verdict = if counts_ok { "PASS" } else { "FAIL" };
    writeln!(out, "{verdict} count: {} diagrams, dim {dim}, {} distinct webs", diagrams.len(), distinct.len())?;
    if !counts_ok {
        failed += 1;
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
