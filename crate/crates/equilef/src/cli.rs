//! The `equilef` command line: load inputs, dispatch computations, verify
//! the exact identities, and emit tables or JSON.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::burnside::{multiply, table_of_marks, BurnsideElement};
use crate::error::{Error, Result};
use crate::io;
use crate::lefschetz::{
    character_map, component_image, component_orbifold_euler, component_orbifold_lefschetz,
    enumerate_classes, equivariant_lefschetz_class, orbifold_euler, orbifold_lefschetz,
    universal_euler, UGBasis, UGElement,
};
use crate::linalg::{QMat, Rat};
use crate::localfix::{local_lefschetz_class, DegreeMode};
use crate::presented::ComponentPresentation;
use crate::realize::{realize_orbit_set, verify_realization};

#[derive(Parser)]
#[command(
    name = "equilef",
    about = "Exact equivariant fixed-point invariants on finite proper G-CW complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of a complex or a presented component category
    Compute {
        #[arg(value_parser = ["euler", "lefschetz", "character", "orbifold"])]
        target: String,
        /// complex file or presentation file
        input: PathBuf,
        /// map file (needed for lefschetz, optional for orbifold)
        map: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Verify one of the exact identities and print PASS or FAIL
    Verify {
        #[arg(value_parser = ["agree", "lemma54", "lemma63"])]
        check: String,
        /// for agree: presentation, or complex + map + fixed-point file;
        /// for lemma54: complex + map; for lemma63: complex
        files: Vec<PathBuf>,
    },
    /// Realize an orbit-category set as a 1-dimensional complex
    Realize {
        orset: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Burnside-ring computations for a finite group
    Burnside {
        #[arg(value_parser = ["marks", "mul"])]
        what: String,
        group: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Compute {
            target,
            input,
            map,
            format,
        } => {
            compute(&target, &input, map.as_deref(), format)?;
            Ok(true)
        }
        Command::Verify { check, files } => verify(&check, &files),
        Command::Realize { orset, output } => {
            let s = io::load_orbit_set(&orset)?;
            let realization = realize_orbit_set(&s)?;
            io::save_complex(&output, &realization.complex)?;
            let report = verify_realization(&realization.complex, &s)?;
            println!(
                "realized: {} cells, dimension {}, verification {}",
                realization.complex.len(),
                realization.complex.max_dim(),
                if report.ok { "PASS" } else { "FAIL" }
            );
            Ok(report.ok)
        }
        Command::Burnside {
            what,
            group,
            format,
        } => {
            burnside_cmd(&what, &group, format)?;
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct ElementOut {
    classes: Vec<String>,
    coeffs: Vec<String>,
}

fn print_element(labels: &[String], coeffs: &[Rat], format: Format) {
    match format {
        Format::Table => {
            let width = labels.iter().map(|l| l.len()).max().unwrap_or(0);
            for (l, c) in labels.iter().zip(coeffs) {
                println!("{l:width$}  {}", io::format_fraction(c));
            }
        }
        Format::Json => {
            let out = ElementOut {
                classes: labels.to_vec(),
                coeffs: coeffs.iter().map(io::format_fraction).collect(),
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
}

#[derive(Serialize)]
struct MatrixOut {
    classes: Vec<String>,
    matrix: Vec<Vec<String>>,
}

fn print_matrix(labels: &[String], m: &QMat, format: Format) {
    let rows: Vec<Vec<String>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(io::format_fraction).collect())
        .collect();
    match format {
        Format::Table => {
            let width = rows
                .iter()
                .flatten()
                .map(|s| s.len())
                .max()
                .unwrap_or(1)
                .max(1);
            let label_width = labels.iter().map(|l| l.len()).max().unwrap_or(0);
            for (l, row) in labels.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                println!("{l:label_width$}  [ {} ]", cells.join(" "));
            }
        }
        Format::Json => {
            let out = MatrixOut {
                classes: labels.to_vec(),
                matrix: rows,
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
}

fn compute(target: &str, input: &Path, map: Option<&Path>, format: Format) -> Result<()> {
    if io::sniff_presentation(input)? {
        let p = io::load_presentation(input)?;
        return compute_presented(target, &p, format);
    }
    let x = io::load_complex(input)?;
    let basis = enumerate_classes(&x)?;
    let labels = basis.labels();
    match target {
        "euler" => {
            let chi = universal_euler(&basis);
            print_element(&labels, &chi.coeffs, format);
        }
        "lefschetz" => {
            let map_path = map.ok_or_else(|| {
                Error::validation("compute lefschetz needs a map file")
            })?;
            let f = io::load_map(map_path, &x)?;
            let lambda = equivariant_lefschetz_class(&basis, &f)?;
            print_element(&labels, &lambda.coeffs, format);
        }
        "character" => {
            let ch = character_map(&basis)?;
            print_matrix(&labels, &ch, format);
        }
        "orbifold" => match map {
            Some(map_path) => {
                let f = io::load_map(map_path, &x)?;
                let l = orbifold_lefschetz(&f);
                println!("{}", io::format_fraction(&l));
            }
            None => {
                let values: Vec<Rat> = basis
                    .classes
                    .iter()
                    .map(|c| component_orbifold_euler(&basis, c.class_idx, c.comp))
                    .collect();
                print_element(&labels, &values, format);
                println!("total  {}", io::format_fraction(&orbifold_euler(&x)));
            }
        },
        _ => unreachable!("clap validated the target"),
    }
    Ok(())
}

fn compute_presented(target: &str, p: &ComponentPresentation, format: Format) -> Result<()> {
    match target {
        "euler" => print_element(&p.labels, &p.euler(), format),
        "orbifold" => print_element(&p.labels, &p.orbifold_euler(), format),
        "character" => print_matrix(&p.labels, &p.character_map(), format),
        "lefschetz" => {
            return Err(Error::validation(
                "lefschetz classes need cellular data; presentations carry none",
            ))
        }
        _ => unreachable!(),
    }
    Ok(())
}

fn report_comparison(labels: &[String], lhs: &[Rat], rhs: &[Rat], lhs_name: &str, rhs_name: &str) -> bool {
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let mut ok = true;
    for ((l, a), b) in labels.iter().zip(lhs).zip(rhs) {
        let mark = if a == b {
            "ok"
        } else {
            ok = false;
            "MISMATCH"
        };
        println!(
            "{l:width$}  {lhs_name}={}  {rhs_name}={}  {mark}",
            io::format_fraction(a),
            io::format_fraction(b)
        );
    }
    println!("{}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn verify(check: &str, files: &[PathBuf]) -> Result<bool> {
    match check {
        "agree" => match files {
            [p] if io::sniff_presentation(p)? => {
                let pres = io::load_presentation(p)?;
                let chi = pres.euler();
                let index = pres.index()?;
                Ok(report_comparison(&pres.labels, &chi, &index, "euler", "index"))
            }
            [complex, map, fixed] => {
                let x = io::load_complex(complex)?;
                let basis = enumerate_classes(&x)?;
                let f = io::load_map(map, &x)?;
                let lambda = equivariant_lefschetz_class(&basis, &f)?;
                let data = io::load_fixed_points(fixed, &x)?;
                if data.iter().any(|(_, mode)| *mode != DegreeMode::Map) {
                    return Err(Error::validation(
                        "agree compares map data; found a field-mode record",
                    ));
                }
                let data: Vec<_> = data.into_iter().map(|(d, _)| d).collect();
                let local = local_lefschetz_class(&basis, &data)?;
                Ok(report_comparison(
                    &basis.labels(),
                    &lambda.coeffs,
                    &local.coeffs,
                    "global",
                    "local",
                ))
            }
            _ => Err(Error::validation(
                "agree takes a presentation file, or complex + map + fixed-point files",
            )),
        },
        "lemma54" => match files {
            [complex, map] => {
                let x = io::load_complex(complex)?;
                let basis = enumerate_classes(&x)?;
                let f = io::load_map(map, &x)?;
                let lambda = equivariant_lefschetz_class(&basis, &f)?;
                let ch = character_map(&basis)?;
                let lhs = ch.mul_vec(&lambda.coeffs);
                let rhs = restricted_lefschetz_values(&basis, &f)?;
                Ok(report_comparison(
                    &basis.labels(),
                    &lhs,
                    &rhs,
                    "ch(lambda)",
                    "restricted",
                ))
            }
            _ => Err(Error::validation("lemma54 takes complex + map files")),
        },
        "lemma63" => match files {
            [complex] => {
                let x = io::load_complex(complex)?;
                let basis = enumerate_classes(&x)?;
                let chi = universal_euler(&basis);
                let ch = character_map(&basis)?;
                let lhs = ch.mul_vec(&chi.coeffs);
                let rhs: Vec<Rat> = basis
                    .classes
                    .iter()
                    .map(|c| component_orbifold_euler(&basis, c.class_idx, c.comp))
                    .collect();
                Ok(report_comparison(
                    &basis.labels(),
                    &lhs,
                    &rhs,
                    "ch(euler)",
                    "orbifold",
                ))
            }
            _ => Err(Error::validation("lemma63 takes a complex file")),
        },
        _ => unreachable!(),
    }
}

/// Per class y = (K, D): the orbifold Lefschetz number of f restricted to D
/// when f preserves D, zero otherwise.
fn restricted_lefschetz_values(
    basis: &UGBasis,
    f: &crate::gcw::CellularGMap,
) -> Result<Vec<Rat>> {
    basis
        .classes
        .iter()
        .map(|c| {
            let target = component_image(basis, c.class_idx, c.comp, f)?;
            Ok(if target == c.comp {
                component_orbifold_lefschetz(basis, c.class_idx, c.comp, f)
            } else {
                Rat::zero()
            })
        })
        .collect()
}

fn burnside_cmd(what: &str, group_path: &Path, format: Format) -> Result<()> {
    let g = io::load_group(group_path)?;
    let marks = table_of_marks(&g)?;
    let labels: Vec<String> = marks
        .classes
        .iter()
        .map(|c| {
            let elems: Vec<String> = c
                .representative
                .elements()
                .iter()
                .map(|e| e.to_string())
                .collect();
            format!("[K/{{{}}}]", elems.join(","))
        })
        .collect();
    match what {
        "marks" => {
            let m = QMat::from_fn(marks.size(), marks.size(), |i, j| {
                crate::linalg::rat(marks.entries[i][j])
            });
            print_matrix(&labels, &m, format);
        }
        "mul" => {
            for i in 0..marks.size() {
                for j in 0..marks.size() {
                    let a = BurnsideElement::basis(g.clone(), marks.size(), i);
                    let b = BurnsideElement::basis(g.clone(), marks.size(), j);
                    let prod = multiply(&marks, &a, &b)?;
                    let terms: Vec<String> = prod
                        .coeffs
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| format!("{c}·{}", labels[k]))
                        .collect();
                    let rhs = if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    };
                    println!("{} · {} = {rhs}", labels[i], labels[j]);
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

/// Formats a U^G element for diagnostics.
pub fn format_element(basis: &UGBasis, u: &UGElement) -> String {
    let terms: Vec<String> = basis
        .classes
        .iter()
        .zip(&u.coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(cl, c)| format!("{}·{}", io::format_fraction(c), cl.label))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
