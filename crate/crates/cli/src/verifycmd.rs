//! The `verify` subcommand: deterministic inequality suites, JSON report plus
//! a CSV of per-sample ratios per suite.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};

use gmhd_core::verify::{run_suite, SuiteResult, VerifyOptions, SUITES};

use crate::runcmd::output_dir_override;

fn write_reports(out_dir: &std::path::Path, res: &SuiteResult) -> Result<()> {
    fs::create_dir_all(out_dir)?;
    let json_path = out_dir.join(format!("verify_{}.json", res.suite));
    fs::write(&json_path, serde_json::to_string_pretty(res)?)
        .with_context(|| format!("writing {}", json_path.display()))?;

    let csv_path = out_dir.join(format!("verify_{}_samples.csv", res.suite));
    let mut csv = std::io::BufWriter::new(fs::File::create(&csv_path)?);
    writeln!(csv, "family,band,sample_index,ratio")?;
    for row in &res.sample_rows {
        writeln!(csv, "{},{},{},{:e}", row.family, row.band, row.index, row.ratio)?;
    }
    csv.flush()?;
    Ok(())
}

pub fn cmd_verify(
    suite: &str,
    seed: u64,
    grid: Option<usize>,
    out: Option<PathBuf>,
) -> Result<i32> {
    let out_dir = out.unwrap_or_else(|| output_dir_override(std::path::Path::new("gmhd_out")));
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let opts = VerifyOptions { seed, grid_n: grid };

    let mut all_passed = true;
    for name in names {
        let res = run_suite(name, opts)?;
        write_reports(&out_dir, &res)?;
        for c in &res.checks {
            println!(
                "  {} {}: observed {:e} vs threshold {:e}",
                if c.passed { "ok " } else { "FAIL" },
                c.name,
                c.observed,
                c.threshold
            );
        }
        for r in &res.reports {
            println!(
                "  {} {}: {} samples, max ratio {:e}, doubling slope {:.3}",
                if matches!(r.verdict, gmhd_core::lp::Verdict::Bounded) { "ok " } else { "FAIL" },
                r.family_id,
                r.samples,
                r.ratio_max,
                r.slope
            );
        }
        println!("suite {}: {}", res.suite, if res.passed { "PASS" } else { "FAIL" });
        all_passed &= res.passed;
    }
    println!("reports written to {}", out_dir.display());
    Ok(if all_passed { 0 } else { 1 })
}
