//! Subcommand implementations. Each fills in a report and returns the
//! error, if any, that decides the exit code.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde_json::json;

use pgsym_core::analysis::{
    analyze, dimension, ez_decompose, is_degenerate, is_group, is_spiny, p_invariant, skeleton,
    GroupoidVerdict,
};
use pgsym_core::constructors::{
    locality_dimension_formula, nerve_of_group, nerve_of_groupoid, product, transporter_groupoid,
    wedge, wedge_decompose,
};
use pgsym_core::enumeration::{
    enumerate_partial_groups, impartial_subgroups, SubgroupListing, SubgroupMode,
};
use pgsym_core::TruncatedSymSet;

use crate::document::{
    load_group, load_groupoid, load_symset, load_transporter, matrix_names, parse_document,
    serialize_document, symset_document, Document, Payload,
};
use crate::error::{CliError, CliResult};
use crate::report::Report;
use crate::Command;

/// Largest level listed by `ez`.
const EZ_LEVEL_LIMIT: u128 = 1_000_000;

const BASIS_DIMENSION: &str =
    "dimension: top degree of a nondegenerate simplex (least n with sk_n X = X)";
const BASIS_P: &str = "a nonempty finite partial groupoid is p-skeletal: dimension <= p";
const BASIS_SPINY: &str =
    "spiny iff one spine per degree evaluates injectively; degrees up to the truncation suffice";
const BASIS_GROUPOID: &str = "a spiny set is a groupoid nerve iff its Segal maps are bijective";
const BASIS_GROUP: &str =
    "a group is a one-object groupoid; n+1 elements and dimension n force a group";
const BASIS_GROUP_NERVE: &str = "a group with n+1 elements has a nerve of dimension n";
const BASIS_CONNECTED: &str =
    "a finite connected groupoid has dimension p = |hom(x,x)| * |X_0| - 1";
const BASIS_PRODUCT: &str = "a product of dimensions n and m has dimension nm + n + m";
const BASIS_DEGENERATE: &str =
    "in a partial groupoid a simplex is degenerate iff an off-diagonal entry is an identity";
const BASIS_EZ: &str =
    "every simplex is y . sigma with y nondegenerate, sigma surjective, unique up to automorphism";
const BASIS_LOCALITY: &str = "transporter dimension = max over P of |P^G| * |N_G(P)| - 1";
const BASIS_SUBGROUPS: &str = "a finite partial group has finitely many im-partial subgroups";
const BASIS_ENUMERATION: &str = "finitely many partial groups have a given finite cardinality";
const BASIS_ONE_DIMENSIONAL: &str =
    "the one-dimensional indecomposable partial groups are C2 and the free partial group on one generator";

pub fn run(command: &Command, report: &mut Report) -> CliResult<()> {
    match command {
        Command::Validate { file } => validate(file, report),
        Command::Info { file } => info(file, report),
        Command::Skeleton { file, n, output } => {
            let x = read_symset(file, report)?;
            let sk = skeleton(&x, *n)?;
            report.fact_with_basis("dimension", dimension(&sk)?, BASIS_DIMENSION);
            write_symset(
                output,
                &sk,
                format!("pgsym skeleton -n {n} {}", file.display()),
                report,
            )
        }
        Command::Ez { file, simplex } => ez(file, simplex, report),
        Command::NerveGroup { table, output } => {
            let doc = read_document(table)?;
            let Payload::Group(data) = &doc.payload else {
                return Err(wrong_kind(table, "group", &doc));
            };
            let g = load_group(data)?;
            let x = nerve_of_group(&g)?;
            report.fact("order", g.order());
            report.fact_with_basis("dimension", dimension(&x)?, BASIS_GROUP_NERVE);
            report.fact_with_basis("p", p_invariant(&x)?.p, BASIS_P);
            report.fact_with_basis("group", is_group(&x)?, BASIS_GROUP);
            write_symset(
                output,
                &x,
                format!("pgsym nerve-group {}", table.display()),
                report,
            )
        }
        Command::NerveGroupoid {
            presentation,
            output,
        } => {
            let doc = read_document(presentation)?;
            let Payload::Groupoid(data) = &doc.payload else {
                return Err(wrong_kind(presentation, "groupoid", &doc));
            };
            let p = load_groupoid(data)?;
            let x = nerve_of_groupoid(&p)?;
            report.fact_with_basis("dimension", dimension(&x)?, BASIS_CONNECTED);
            report.fact_with_basis("p", p_invariant(&x)?.p, BASIS_P);
            report.fact("components", component_names(&x));
            write_symset(
                output,
                &x,
                format!("pgsym nerve-groupoid {}", presentation.display()),
                report,
            )
        }
        Command::Transporter {
            spec,
            output,
            strict_delta,
        } => {
            let doc = read_document(spec)?;
            let Payload::Transporter(data) = &doc.payload else {
                return Err(wrong_kind(spec, "transporter", &doc));
            };
            let spec_value = load_transporter(data)?;
            let outcome = transporter_groupoid(&spec_value, *strict_delta)?;
            for w in &outcome.warnings {
                report.note(w.clone());
            }
            let x = &outcome.nerve;
            report.fact("objects", x.edges().object_names().to_vec());
            report.fact_with_basis("dimension", dimension(x)?, BASIS_DIMENSION);
            report.fact_with_basis(
                "formula_dimension",
                locality_dimension_formula(&spec_value)?,
                BASIS_LOCALITY,
            );
            report.fact_with_basis("p", p_invariant(x)?.p, BASIS_P);
            write_symset(
                output,
                x,
                format!("pgsym transporter {}", spec.display()),
                report,
            )
        }
        Command::Product { a, b, output } => {
            let x = read_symset(a, report)?;
            let y = read_symset(b, report)?;
            let z = product(&x, &y)?;
            report.fact("dimensions", [dimension(&x)?, dimension(&y)?]);
            report.fact_with_basis("dimension", dimension(&z)?, BASIS_PRODUCT);
            report.fact("truncation", z.truncation());
            write_symset(
                output,
                &z,
                format!("pgsym product {} {}", a.display(), b.display()),
                report,
            )
        }
        Command::Wedge { a, b, output } => {
            let x = read_symset(a, report)?;
            let y = read_symset(b, report)?;
            let z = wedge(&x, &y)?;
            report.fact_with_basis("dimension", dimension(&z)?, BASIS_DIMENSION);
            report.fact("edges", z.edges().nonidentity_edges().count());
            report.fact_with_basis("spiny", is_spiny(&z), BASIS_SPINY);
            write_symset(
                output,
                &z,
                format!("pgsym wedge {} {}", a.display(), b.display()),
                report,
            )
        }
        Command::Decompose { file, output } => decompose(file, output.as_deref(), report),
        Command::Subgroups(args) => {
            let x = read_symset(&args.file, report)?;
            let mode = if args.list {
                SubgroupMode::List
            } else {
                SubgroupMode::Count
            };
            match impartial_subgroups(&x, mode)? {
                SubgroupListing::Count(c) => {
                    report.fact_with_basis("count", c, BASIS_SUBGROUPS);
                    Ok(())
                }
                SubgroupListing::List(list) => {
                    report.fact_with_basis("count", list.len(), BASIS_SUBGROUPS);
                    let dir = args
                        .output
                        .as_ref()
                        .expect("clap requires --output with --list");
                    create_dir(dir)?;
                    let mut entries = Vec::new();
                    for (i, s) in list.iter().enumerate() {
                        let sub = s.to_symset()?;
                        let path = dir.join(format!("subgroup-{i:04}.json"));
                        let provenance = format!(
                            "pgsym subgroups --list {}: subgroup {} of {}",
                            args.file.display(),
                            i + 1,
                            list.len()
                        );
                        write_file(
                            &path,
                            &serialize_document(&symset_document(&sub, provenance)),
                        )?;
                        entries.push(json!({
                            "file": path.display().to_string(),
                            "nondegenerate_counts": trimmed_counts(&sub),
                        }));
                        report.output(path.display().to_string());
                    }
                    report.fact("subgroups", entries);
                    Ok(())
                }
            }
        }
        Command::Enumerate { card, cap, output } => {
            let classes = enumerate_partial_groups(*card, *cap)?;
            report.fact_with_basis("count", classes.len(), BASIS_ENUMERATION);
            create_dir(output)?;
            let mut entries = Vec::new();
            for (i, p) in classes.iter().enumerate() {
                let x = &p.representative;
                let path = output.join(format!("partial-group-k{card}-{i:03}.json"));
                let provenance = format!(
                    "pgsym enumerate --card {card}: class {} of {}, key {}",
                    i + 1,
                    classes.len(),
                    p.key.to_hex()
                );
                write_file(&path, &serialize_document(&symset_document(x, provenance)))?;
                report.output(path.display().to_string());
                entries.push(json!({
                    "file": path.display().to_string(),
                    "key": p.key.to_hex(),
                    "dimension": dimension(x)?,
                    "group": is_group(x)?,
                    "nondegenerate_counts": trimmed_counts(x),
                }));
            }
            report.fact("classes", entries);
            Ok(())
        }
    }
}

fn read_document(path: &Path) -> CliResult<Document> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read `{}`: {e}", path.display())))?;
    parse_document(&text).map_err(|e| e.context(path.display()))
}

fn wrong_kind(path: &Path, expected: &str, doc: &Document) -> CliError {
    CliError::Invalid(format!(
        "{}: expected a `{expected}` document, found `{}`",
        path.display(),
        doc.payload.kind()
    ))
}

fn read_symset(path: &Path, report: &mut Report) -> CliResult<TruncatedSymSet> {
    let doc = read_document(path)?;
    let Payload::Symset(data) = &doc.payload else {
        return Err(wrong_kind(path, "symset", &doc));
    };
    let loaded = load_symset(data).map_err(|e| e.context(path.display()))?;
    for n in loaded.notes {
        report.note(format!("{}: {n}", path.display()));
    }
    Ok(loaded.set)
}

fn create_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Invalid(format!("cannot create `{}`: {e}", dir.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text)
        .map_err(|e| CliError::Invalid(format!("cannot write `{}`: {e}", path.display())))
}

fn write_symset(
    path: &Path,
    x: &TruncatedSymSet,
    provenance: String,
    report: &mut Report,
) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        create_dir(parent)?;
    }
    write_file(path, &serialize_document(&symset_document(x, provenance)))?;
    report.output(path.display().to_string());
    Ok(())
}

fn trimmed_counts(x: &TruncatedSymSet) -> Vec<usize> {
    let mut c = x.nondegenerate_counts();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn component_names(x: &TruncatedSymSet) -> Vec<Vec<String>> {
    pgsym_core::analysis::components(x)
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|o| x.edges().object_name(o).to_string())
                .collect()
        })
        .collect()
}

fn validate(file: &Path, report: &mut Report) -> CliResult<()> {
    let doc = read_document(file)?;
    report.fact("kind", doc.payload.kind());
    match &doc.payload {
        Payload::Symset(data) => {
            let loaded = load_symset(data).map_err(|e| e.context(file.display()))?;
            for n in loaded.notes {
                report.note(n);
            }
            report.fact("valid", true);
            report.fact_with_basis("spiny", is_spiny(&loaded.set), BASIS_SPINY);
        }
        Payload::Group(data) => {
            let g = load_group(data)?;
            report.fact("valid", true);
            report.fact("order", g.order());
        }
        Payload::Groupoid(data) => {
            let p = load_groupoid(data)?;
            report.fact("valid", true);
            report.fact("morphisms", p.morphisms().len());
        }
        Payload::Transporter(data) => {
            let spec = load_transporter(data)?;
            let (delta, warnings) = spec.normalized_delta(false)?;
            for w in warnings {
                report.note(w);
            }
            report.fact("valid", true);
            report.fact("subgroups", delta.len());
        }
    }
    Ok(())
}

fn info(file: &Path, report: &mut Report) -> CliResult<()> {
    let x = read_symset(file, report)?;
    let profile = analyze(&x)?;
    report.fact("truncation", profile.truncation);
    report.fact("objects", x.edges().object_count());
    report.fact("edges", x.edges().nonidentity_edges().count());
    report.fact_with_basis("dimension", profile.dimension, BASIS_DIMENSION);
    report.fact_with_basis("p", profile.p_invariant, BASIS_P);
    let n_x: BTreeMap<String, usize> = profile.n_x.iter().cloned().collect();
    report.fact("n_x", n_x);
    report.fact_with_basis("spiny", profile.spiny, BASIS_SPINY);
    report.fact_with_basis("groupoid", profile.groupoid, BASIS_GROUPOID);
    report.fact_with_basis("group", profile.group, BASIS_GROUP);
    if let Some(verdict) = &profile.groupoid_verdict {
        if let Some(reason) = verdict_reason(&x, verdict) {
            report.fact("groupoid_reason", reason);
        }
    }
    report.fact("components", profile.connected_components.clone());
    let counts: BTreeMap<String, usize> = profile
        .nondegenerate_counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (k.to_string(), c))
        .collect();
    report.fact("nondegenerate_counts", counts);
    if x.is_reduced() && profile.dimension == Some(1) && profile.spiny {
        report.fact_with_basis(
            "indecomposable_factors",
            wedge_decompose(&x)?.len(),
            BASIS_ONE_DIMENSIONAL,
        );
    }
    Ok(())
}

fn verdict_reason(x: &TruncatedSymSet, verdict: &GroupoidVerdict) -> Option<String> {
    let names = |chain: &[pgsym_core::EdgeId]| {
        chain
            .iter()
            .map(|&e| x.edges().edge_name(e).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    match verdict {
        GroupoidVerdict::Groupoid => None,
        GroupoidVerdict::SegalNotBijective {
            degree,
            simplices,
            tuples,
            missing,
        } => Some(match missing {
            Some(chain) => format!(
                "degree {degree}: {simplices} simplices for {tuples} composable chains; no simplex over ({})",
                names(chain)
            ),
            None => format!("degree {degree}: {simplices} simplices for {tuples} composable chains"),
        }),
        GroupoidVerdict::TruncationBelowP {
            truncation,
            p,
            missing,
        } => Some(match missing {
            Some((n, chain)) => format!(
                "truncation {truncation} is below p = {p}; degree {n} has no simplex over ({})",
                names(chain)
            ),
            None => format!("truncation {truncation} is below p = {p}"),
        }),
    }
}

fn ez(file: &Path, simplex: &str, report: &mut Report) -> CliResult<()> {
    let x_set = read_symset(file, report)?;
    let (degree, index) = simplex
        .split_once(':')
        .and_then(|(d, i)| {
            Some((
                d.trim().parse::<usize>().ok()?,
                i.trim().parse::<usize>().ok()?,
            ))
        })
        .ok_or_else(|| {
            CliError::Invalid(format!("--simplex: expected DEGREE:INDEX, got `{simplex}`"))
        })?;
    let size = x_set.simplex_count(degree);
    if size > EZ_LEVEL_LIMIT {
        return Err(CliError::Precondition(format!(
            "--simplex: level {degree} has {size} simplices, above the listing limit {EZ_LEVEL_LIMIT}"
        )));
    }
    if !is_spiny(&x_set) {
        return Err(CliError::Precondition(
            "ez requires a spiny symmetric set".into(),
        ));
    }
    let level = x_set.materialize(degree);
    let x = level.iter().nth(index).ok_or_else(|| {
        CliError::Invalid(format!(
            "--simplex: index {index} out of range; level {degree} has {} simplices",
            level.len()
        ))
    })?;
    let edges = x_set.edges();
    let ez = ez_decompose(&x_set, x)?;
    report.fact("simplex", matrix_names(edges, x));
    report.fact_with_basis("degenerate", is_degenerate(&x_set, x)?, BASIS_DEGENERATE);
    report.fact("base_degree", ez.base.degree());
    report.fact_with_basis("base", matrix_names(edges, &ez.base), BASIS_EZ);
    report.fact("surjection", ez.surjection.values().to_vec());
    Ok(())
}

fn decompose(file: &Path, output: Option<&Path>, report: &mut Report) -> CliResult<()> {
    let x = read_symset(file, report)?;
    let factors = wedge_decompose(&x)?;
    report.fact("count", factors.len());
    if let Some(dir) = output {
        create_dir(dir)?;
    }
    let mut entries = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let edges = f.edges();
        let names: Vec<String> = edges
            .nonidentity_edges()
            .map(|e| edges.edge_name(e).to_string())
            .collect();
        let mut entry = json!({
            "edges": names,
            "dimension": dimension(f)?,
            "group": is_group(f)?,
            "nondegenerate_counts": trimmed_counts(f),
        });
        if let Some(dir) = output {
            let path = dir.join(format!("factor-{i:03}.json"));
            let provenance = format!(
                "pgsym decompose {}: factor {} of {}",
                file.display(),
                i + 1,
                factors.len()
            );
            write_file(&path, &serialize_document(&symset_document(f, provenance)))?;
            entry["file"] = json!(path.display().to_string());
            report.output(path.display().to_string());
        }
        entries.push(entry);
    }
    report.fact("factors", entries);
    Ok(())
}
