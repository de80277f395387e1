use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use log::{debug, info, warn};
use scp_core::format::{mate_to_json, pair_to_json, parse_pair_or_mate, PairFile, PairOrMate};
use scp_core::verify::{
    check_mate, check_scp, exhaustive_sweep, table1_reproduce, write_table1_csv, Claim, ReportKind,
    SweepConfig, VerificationReport,
};
use scp_core::{
    auto_profile, construct_scp, cross_profile, theorem2_mate, CorrelationProfile, ScpPair,
};
use serde::Serialize;

use crate::args::{CorrelateArgs, Format, ParamArgs, ProfileKind, SweepArgs, VerifyArgs};

/// Process outcome: `Ok(true)` when every check held.
pub type Outcome = Result<bool>;

pub struct Output<'a> {
    pub path: Option<&'a Path>,
    pub format: Option<Format>,
}

impl Output<'_> {
    fn write(&self, text: &str) -> Result<()> {
        match self.path {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                match stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                    _ => Ok(()),
                }
            }
        }
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn json_only(&self, command: &str) -> Result<()> {
        if self.format == Some(Format::Csv) {
            bail!("`{command}` writes JSON only");
        }
        Ok(())
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn construct(args: &ParamArgs, out: &Output) -> Outcome {
    out.json_only("construct")?;
    let params = args.resolve()?;
    let pair = construct_scp(&params).context("cannot construct pair")?;
    info!(
        "constructed pair: q={} m={} t={} L={} Z={}",
        params.q(),
        params.m(),
        params.t(),
        params.length(),
        params.zcz()
    );
    out.write(&with_newline(pair_to_json(&pair)))?;
    Ok(true)
}

pub fn mate(args: &ParamArgs, out: &Output) -> Outcome {
    out.json_only("mate")?;
    let params = args.resolve()?;
    let pair = construct_scp(&params).context("cannot construct pair")?;
    let mate = theorem2_mate(&params).context("cannot construct mate")?;
    out.write(&with_newline(mate_to_json(&pair, &mate)))?;
    Ok(true)
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    first_failure: Option<String>,
    reports: &'a [VerificationReport],
}

/// Pair report with a leading `header` claim. Pairs whose sequences differ
/// in length cannot be correlated and get a structural report instead.
fn pair_report(file: &PairFile, claimed: Option<usize>) -> Result<(ScpPair, VerificationReport)> {
    let pair = file.to_pair_lenient().context("invalid sequence entries")?;
    let z = claimed.unwrap_or_else(|| pair.params.zcz());
    let header = Claim::structural("header", file.header_consistent());
    let mut report = if pair.c0.len() != pair.c1.len() {
        VerificationReport::structural(
            ReportKind::Scp,
            pair.q(),
            pair.c0.len(),
            z,
            vec![Claim::structural("length-match", false)],
        )
    } else {
        check_scp(&pair, z)?
    };
    report.claims.insert(0, header);
    Ok((pair, report))
}

pub fn verify(args: &VerifyArgs, out: &Output) -> Outcome {
    out.json_only("verify")?;
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let parsed =
        parse_pair_or_mate(&text).with_context(|| format!("parsing {}", args.input.display()))?;
    let reports = match parsed {
        PairOrMate::Pair(file) => vec![pair_report(&file, args.z)?.1],
        PairOrMate::Mate(file) => {
            let (pair, r0) = pair_report(&file.pair, args.z)?;
            let (mate, r1) = pair_report(&file.mate, args.z)?;
            let mut reports = vec![r0, r1];
            if pair.len() == mate.len()
                && pair.c0.len() == pair.c1.len()
                && mate.c0.len() == mate.c1.len()
            {
                let z = args.z.unwrap_or_else(|| pair.params.zcz());
                reports.push(check_mate(&pair, &mate, z)?);
            } else {
                reports.push(VerificationReport::structural(
                    ReportKind::Mate,
                    pair.q(),
                    pair.len(),
                    args.z.unwrap_or_else(|| pair.params.zcz()),
                    vec![Claim::structural("length-match", false)],
                ));
            }
            reports
        }
    };
    let first = reports
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.first_failure().map(|c| (i, r.kind, c.clone())));
    let passed = first.is_none();
    let first_failure = first.as_ref().map(|(_, _, c)| c.id.clone());
    let json = serde_json::to_string_pretty(&VerifyOutput {
        passed,
        first_failure,
        reports: &reports,
    })?;
    out.write(&with_newline(json))?;
    if let Some((i, kind, claim)) = first {
        let at = claim
            .counterexample
            .map(|u| format!(" at shift u = {u}"))
            .unwrap_or_default();
        eprintln!(
            "verification failed: report {i} ({}) claim `{}`{at}",
            match kind {
                ReportKind::Scp => "scp",
                ReportKind::Mate => "mate",
            },
            claim.id
        );
    }
    Ok(passed)
}

#[derive(Serialize)]
struct ProfileRow {
    u: i64,
    re: f64,
    im: f64,
    magnitude: f64,
    is_exact_zero: bool,
}

fn profile_rows(p: &CorrelationProfile) -> Vec<ProfileRow> {
    p.iter()
        .map(|(u, v)| {
            if v.is_zero() {
                ProfileRow {
                    u,
                    re: 0.0,
                    im: 0.0,
                    magnitude: 0.0,
                    is_exact_zero: true,
                }
            } else {
                let (re, im) = v.to_complex();
                ProfileRow {
                    u,
                    re,
                    im,
                    magnitude: re.hypot(im),
                    is_exact_zero: false,
                }
            }
        })
        .collect()
}

fn profile(
    kind: ProfileKind,
    pair: &ScpPair,
    mate: Option<&ScpPair>,
) -> Result<CorrelationProfile> {
    let need_mate =
        || mate.context("this profile kind needs a mate (use a mate file or parameters)");
    Ok(match kind {
        ProfileKind::Aacs => auto_profile(&pair.c0).sum(&auto_profile(&pair.c1))?,
        ProfileKind::Auto0 => auto_profile(&pair.c0),
        ProfileKind::Auto1 => auto_profile(&pair.c1),
        ProfileKind::Cross => cross_profile(&pair.c0, &pair.c1)?,
        ProfileKind::MateSum => {
            let s = need_mate()?;
            cross_profile(&pair.c0, &s.c0)?.sum(&cross_profile(&pair.c1, &s.c1)?)?
        }
        ProfileKind::C0s0 => cross_profile(&pair.c0, &need_mate()?.c0)?,
        ProfileKind::C0s1 => cross_profile(&pair.c0, &need_mate()?.c1)?,
        ProfileKind::C1s0 => cross_profile(&pair.c1, &need_mate()?.c0)?,
        ProfileKind::C1s1 => cross_profile(&pair.c1, &need_mate()?.c1)?,
    })
}

pub fn correlate(args: &CorrelateArgs, out: &Output) -> Outcome {
    let (pair, mate) = if let Some(path) = &args.input {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        match parse_pair_or_mate(&text).with_context(|| format!("parsing {}", path.display()))? {
            PairOrMate::Pair(f) => (f.to_pair()?, None),
            PairOrMate::Mate(f) => (f.pair.to_pair()?, Some(f.mate.to_pair()?)),
        }
    } else if args.params.is_given() {
        let params = args.params.resolve()?;
        let pair = construct_scp(&params).context("cannot construct pair")?;
        let mate = if args.kind.needs_mate() {
            Some(theorem2_mate(&params).context("cannot construct mate")?)
        } else {
            None
        };
        (pair, mate)
    } else {
        bail!("give --input <file> or construction parameters (--params, --m, ...)");
    };
    let p = profile(args.kind, &pair, mate.as_ref())?;
    debug!("profile over {} shifts", p.iter().count());
    let text = match out.format_or(Format::Csv) {
        Format::Csv => p.to_csv_string(),
        Format::Json => with_newline(serde_json::to_string_pretty(&profile_rows(&p))?),
    };
    out.write(&text)?;
    Ok(true)
}

pub fn table1(out: &Output) -> Outcome {
    let rows = table1_reproduce()?;
    for r in rows.iter().filter(|r| !r.matches_reference) {
        warn!(
            "length {}: rebuilt values (Z={}, S={}) differ from the reference entry",
            r.length, r.zcz, r.sparsity
        );
    }
    let text = match out.format_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            write_table1_csv(&rows, &mut buf)?;
            String::from_utf8(buf)?
        }
        Format::Json => with_newline(serde_json::to_string_pretty(&rows)?),
    };
    out.write(&text)?;
    let failed: Vec<usize> = rows
        .iter()
        .filter(|r| !r.verified)
        .map(|r| r.length)
        .collect();
    if !failed.is_empty() {
        eprintln!("verification failed for lengths {failed:?}");
    }
    Ok(failed.is_empty())
}

pub fn sweep(args: &SweepArgs, seed: u64, out: &Output) -> Outcome {
    if args.m_min > args.m_max {
        bail!("--m-min {} exceeds --m-max {}", args.m_min, args.m_max);
    }
    let config = SweepConfig {
        q_set: args.q_set.clone(),
        m_min: args.m_min,
        m_max: args.m_max,
        seed,
        enforce_order_constraint: !args.no_order_constraint,
        timing: args.timing,
    };
    for &q in &config.q_set {
        if q < 2 || q % 2 != 0 {
            bail!("alphabet size must be even and at least 2, got {q}");
        }
    }
    if config.m_max > 8 {
        warn!(
            "m = {} enumerates m! permutations; this may take a while",
            config.m_max
        );
    }
    let summary = exhaustive_sweep(&config);
    info!(
        "sweep: {}/{} pairs and {}/{} mates passed",
        summary.scp_passed, summary.scp_total, summary.mate_passed, summary.mate_total
    );
    let text = match out.format_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            summary.write_csv(&mut buf)?;
            String::from_utf8(buf)?
        }
        Format::Json => with_newline(serde_json::to_string_pretty(&summary)?),
    };
    out.write(&text)?;
    let failures = summary.failures().count();
    if failures > 0 {
        eprintln!("{failures} sweep cells failed verification");
    }
    Ok(failures == 0)
}
