mod cli;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use rayon::prelude::*;

use steiner_pasch::constructions::{ag_power, bose, choose_enough_c, direct_product, NettoSpec};
use steiner_pasch::field::FieldSpec;
use steiner_pasch::format::{ReportJson, StsFile};
use steiner_pasch::generate::gen_all;
use steiner_pasch::invariants::{
    a_and_b, invariant_report, pasch_configs, product_formulas, third_binom2, InvariantReport,
};
use steiner_pasch::oracle::{pasch_count_by_4subsets, theorem_suite, SuiteOptions, DEFAULT_MAX_BLOCKS};
use steiner_pasch::SteinerTripleSystem;

use cli::{Cli, Command, ConstructKind};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<SteinerTripleSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = StsFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    file.to_system().with_context(|| format!("validating {}", path.display()))
}

fn emit(file: &StsFile, output: Option<&PathBuf>) -> Result<()> {
    let text = file.render();
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `Ok(false)` means the command ran but a check failed.
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Construct { kind } => construct(kind).map(|()| true),
        Command::Invariants { input, table } => {
            let s = load(input)?;
            let report = invariant_report(&s);
            if *table {
                print!("{}", render_table(&report));
            } else {
                println!("{}", ReportJson::from(&report).to_json());
            }
            Ok(!cli.oracle || print_suite(&s))
        }
        Command::Product { left, right, output } => {
            let (s, t) = (load(left)?, load(right)?);
            let product = direct_product(&s, &t)?;
            let file = StsFile::from_system(&product)
                .with_comment("construction", "product")
                .with_comment("left", left.display())
                .with_comment("right", right.display());
            emit(&file, output.as_ref()).map(|()| true)
        }
        Command::VerifyProduct { left, right, max_order } => verify_product(left, right, *max_order),
        Command::Pasch { input, list } => {
            let s = load(input)?;
            let configs = pasch_configs(&s);
            println!("pasch_count: {}", configs.len());
            if *list {
                for cfg in &configs {
                    let p = cfg.points;
                    println!("{} {} {} {} {} {}", p[0], p[1], p[2], p[3], p[4], p[5]);
                }
            }
            if cli.oracle {
                let brute = pasch_count_by_4subsets(&s, DEFAULT_MAX_BLOCKS)?;
                let ok = brute == configs.len() as u64;
                println!("{} pasch-count-oracle: 4-subsets {brute}", if ok { "PASS" } else { "FAIL" });
                return Ok(ok);
            }
            Ok(true)
        }
        Command::Spectrum { dir } => spectrum(dir, cli.json),
        Command::GenAll { n, output, no_normalize } => gen(*n, output, !*no_normalize),
    }
}

fn construct(kind: &ConstructKind) -> Result<()> {
    let (file, out) = match kind {
        ConstructKind::Pg { k, out } => {
            eprintln!("construct pg: k = {k}");
            let s = steiner_pasch::constructions::pg(*k)?;
            (StsFile::from_system(&s).with_comment("construction", "pg").with_comment("k", k), out)
        }
        ConstructKind::Ag { m, out } => {
            eprintln!("construct ag: m = {m}");
            let s = ag_power(*m)?;
            (StsFile::from_system(&s).with_comment("construction", "ag").with_comment("m", m), out)
        }
        ConstructKind::Product { left, right, out } => {
            eprintln!("construct product: {} x {}", left.display(), right.display());
            let s = direct_product(&load(left)?, &load(right)?)?;
            let file = StsFile::from_system(&s)
                .with_comment("construction", "product")
                .with_comment("left", left.display())
                .with_comment("right", right.display());
            (file, out)
        }
        ConstructKind::Netto { q, c, auto_c, out } => {
            let field = FieldSpec::for_order(*q)?;
            if q % 6 != 1 {
                return Err(steiner_pasch::Error::BadOrderModSix(*q).into());
            }
            let spec = if *auto_c {
                choose_enough_c(&field)?
            } else {
                if c.is_empty() {
                    bail!("netto needs either --c or --auto-c");
                }
                NettoSpec::new(field, c)?
            };
            let c_text = spec.c.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
            eprintln!("construct netto: q = {q}, x = {}, y = {}, C = {{{c_text}}}", spec.x, spec.y);
            let s = spec.system()?;
            let mut file = StsFile::from_system(&s)
                .with_comment("construction", "netto")
                .with_comment("q", q);
            if field.degree() == 2 {
                let [c0, c1] = field.modulus();
                file = file.with_comment("modulus", format!("z^2 + {c1}z + {c0}"));
            }
            let file = file
                .with_comment("x", spec.x)
                .with_comment("y", spec.y)
                .with_comment("C", format!("{{{c_text}}}"));
            (file, out)
        }
        ConstructKind::Bose { n, out } => {
            eprintln!("construct bose: n = {n}");
            let s = bose(*n)?;
            (StsFile::from_system(&s).with_comment("construction", "bose").with_comment("n", n), out)
        }
    };
    emit(&file, out.output.as_ref())
}

fn flag_letters(r: &InvariantReport) -> String {
    let f = r.flags;
    [(f.projective, 'P'), (f.anti_pasch, 'A'), (f.strongly_anti_pasch, 'S'), (f.enough_pasch, 'E')]
        .iter()
        .map(|&(on, ch)| if on { ch } else { '-' })
        .collect()
}

fn render_table(r: &InvariantReport) -> String {
    let rows = [
        ("n", r.n.to_string()),
        ("blocks", r.block_count.to_string()),
        ("alpha", r.alpha.to_string()),
        ("beta", r.beta.to_string()),
        ("gamma", r.gamma.to_string()),
        ("pasch_count", r.pasch_count.to_string()),
        ("projective", r.flags.projective.to_string()),
        ("anti_pasch", r.flags.anti_pasch.to_string()),
        ("strongly_anti_pasch", r.flags.strongly_anti_pasch.to_string()),
        ("enough_pasch", r.flags.enough_pasch.to_string()),
        ("bounds_ok", r.bounds_ok.to_string()),
        ("degenerate", r.degenerate.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<20} {v:>12}");
    }
    out
}

fn print_suite(s: &SteinerTripleSystem) -> bool {
    let mut all = true;
    for check in theorem_suite(s, SuiteOptions::default()) {
        all &= check.passed;
        println!("{} {}: {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
    }
    all
}

fn verify_product(left: &Path, right: &Path, max_order: u32) -> Result<bool> {
    let (s, t) = (load(left)?, load(right)?);
    let order = s.order() as u64 * t.order() as u64;
    if order > max_order as u64 {
        bail!("product order {order} exceeds the enumeration budget --max-order {max_order}");
    }
    let predicted = product_formulas(&invariant_report(&s), &invariant_report(&t));
    let (a, b) = a_and_b(&direct_product(&s, &t)?);
    let measured = (a.len() as u64, b.len() as u64, (b.len() - a.len()) as u64);
    println!("order {} x {} = {order}", s.order(), t.order());
    println!("{:<6} {:>12} {:>12}", "", "predicted", "measured");
    let mut ok = true;
    for (name, p, m) in [
        ("alpha", predicted.alpha, measured.0),
        ("beta", predicted.beta, measured.1),
        ("gamma", predicted.gamma, measured.2),
    ] {
        ok &= p == m;
        println!("{name:<6} {p:>12} {m:>12}");
    }
    println!("{}", if ok { "match" } else { "MISMATCH" });
    Ok(ok)
}

fn spectrum(dir: &Path, json: bool) -> Result<bool> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sts"))
        .collect();
    paths.sort();
    let mut rows: Vec<(u32, String, Result<InvariantReport, String>)> = paths
        .par_iter()
        .map(|p| {
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            match load(p) {
                Ok(s) => (s.order(), name, Ok(invariant_report(&s))),
                Err(e) => (0, name, Err(format!("{e:#}"))),
            }
        })
        .collect();
    rows.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));

    let (mut errors, mut violations) = (0, 0);
    if !json {
        println!(
            "{:<28} {:>5} {:>9} {:>9} {:>7} {:>8} {:>5}",
            "file", "n", "alpha", "beta", "gamma", "pasch", "flags"
        );
    }
    for (_, name, row) in &rows {
        match row {
            Ok(r) => {
                let third = third_binom2(r.n as u64);
                let gap = third > 0 && r.gamma == third - 1;
                if !r.bounds_ok || gap {
                    violations += 1;
                }
                if json {
                    println!("{{\"file\":{:?},\"report\":{}}}", name, ReportJson::from(r).to_json());
                } else {
                    println!(
                        "{:<28} {:>5} {:>9} {:>9} {:>7} {:>8} {:>5}{}",
                        name,
                        r.n,
                        r.alpha,
                        r.beta,
                        r.gamma,
                        r.pasch_count,
                        flag_letters(r),
                        if gap || !r.bounds_ok { "  VIOLATION" } else { "" }
                    );
                }
            }
            Err(e) => {
                errors += 1;
                if json {
                    println!("{{\"file\":{:?},\"error\":{:?}}}", name, e);
                } else {
                    println!("{name:<28} error: {e}");
                }
            }
        }
    }
    if !json {
        println!("files: {}, errors: {errors}, violations: {violations}", rows.len());
    }
    Ok(errors == 0 && violations == 0)
}

fn gen(n: u32, output: &Path, normalize: bool) -> Result<bool> {
    let census = gen_all(n, normalize)?;
    fs::create_dir_all(output).with_context(|| format!("creating {}", output.display()))?;
    let mut summary = String::new();
    let _ = writeln!(summary, "n: {n}");
    let _ = writeln!(summary, "normalized: {normalize}");
    let _ = writeln!(summary, "labelled_count: {}", census.labelled_count);
    let _ = writeln!(summary, "classes: {}", census.classes.len());
    for (i, (s, size)) in census.classes.iter().zip(&census.class_sizes).enumerate() {
        let name = format!("sts{n}_class{}.sts", i + 1);
        let r = invariant_report(s);
        let file = StsFile::from_system(s)
            .with_comment("construction", "gen-all")
            .with_comment("class", format!("{} of {}", i + 1, census.classes.len()))
            .with_comment("labelled_in_class", size);
        fs::write(output.join(&name), file.render())?;
        let _ = writeln!(
            summary,
            "{name}: labelled {size}, alpha {}, beta {}, gamma {}, pasch {}",
            r.alpha, r.beta, r.gamma, r.pasch_count
        );
    }
    fs::write(output.join("census.txt"), &summary)?;
    print!("{summary}");
    Ok(true)
}
