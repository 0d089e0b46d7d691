use std::io::Write;
use std::path::Path;

use ewd_core::hierarchy::{
    collapsed_hardy, fast_growing, hardy_ord, hardy_ord_traced, hardy_tree, hardy_tree_traced, hardy_tree_wormstyle,
    hardy_tree_wormstyle_traced, hardy_worm, hardy_worm_traced, BigSummary, EvalTrace, Evaluation,
    DEFAULT_TRACE_ENTRIES,
};
use ewd_core::{Ordinal, TreeOrdinal, Worm};
use ewd_lab::checks::check_instance;
use ewd_lab::{CheckReport, Instance, Verdict};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::{Ctx, Failure, Format, HardyFlavor, TermKind};

/// Values with more decimal digits than this are summarized unless `--full`.
const MAX_DIGITS: u64 = 10_000;

fn worm(src: &str) -> Result<Worm, Failure> {
    Worm::parse(src).map_err(|source| Failure::Parse { what: "worm", input: src.into(), source })
}

fn ordinal(ctx: &Ctx, src: &str) -> Result<Ordinal, Failure> {
    Ordinal::parse_within(src, ctx.budget.max_term_size)
        .map_err(|source| Failure::Parse { what: "ordinal", input: src.into(), source })
}

fn tree(ctx: &Ctx, src: &str) -> Result<TreeOrdinal, Failure> {
    TreeOrdinal::parse_within(src, ctx.budget.max_term_size)
        .map_err(|source| Failure::Parse { what: "tree ordinal", input: src.into(), source })
}

fn json_line(ctx: &mut Ctx, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut ctx.out, value).map_err(std::io::Error::from)?;
    writeln!(ctx.out)?;
    Ok(())
}

pub fn battle(ctx: &mut Ctx, src: &str) -> Result<(), Failure> {
    let a = worm(src)?;
    let trace = ewd_core::battle(&a, &ctx.budget);
    match ctx.format {
        Format::JsonLines => trace.write_json_lines(&mut ctx.out)?,
        Format::Csv => trace.write_csv(&mut ctx.out)?,
        Format::Text => {
            for r in &trace.records {
                match (&r.worm, &r.leading) {
                    (Some(w), _) => writeln!(ctx.out, "{}: {w}", r.step)?,
                    (None, Some(lead)) => writeln!(ctx.out, "{}: length {}, leading {lead}", r.step, r.length)?,
                    (None, None) => writeln!(ctx.out, "{}: T", r.step)?,
                }
            }
            if let Some(m) = trace.death_step {
                writeln!(ctx.out, "dies at m={m}")?;
            }
        }
    }
    match trace.budget_exceeded {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn write_trace(ctx: &mut Ctx, trace: &EvalTrace) -> Result<(), Failure> {
    match ctx.format {
        Format::JsonLines => trace.write_json_lines(&mut ctx.out)?,
        _ => {
            for e in &trace.entries {
                writeln!(ctx.out, "{}: {} @ {}", e.step, e.index_term, e.argument)?;
            }
            if trace.truncated {
                writeln!(ctx.out, "... ({} steps in total)", trace.total_steps)?;
            }
        }
    }
    Ok(())
}

fn small_value(ctx: &mut Ctx, flavor: &str, index: &str, arg: u64, value: u64) -> Result<(), Failure> {
    match ctx.format {
        Format::JsonLines => json_line(ctx, &json!({ "flavor": flavor, "index": index, "arg": arg, "value": value })),
        _ => Ok(writeln!(ctx.out, "{value}")?),
    }
}

fn big_value(ctx: &mut Ctx, flavor: &str, index: &str, arg: u64, value: &BigUint) -> Result<(), Failure> {
    let shown = if ctx.full { BigSummary::Exact(value.to_str_radix(10)) } else { BigSummary::of(value, MAX_DIGITS) };
    match ctx.format {
        Format::JsonLines => json_line(ctx, &json!({ "flavor": flavor, "index": index, "arg": arg, "value": shown })),
        _ => Ok(writeln!(ctx.out, "{shown}")?),
    }
}

pub fn hardy(ctx: &mut Ctx, flavor: HardyFlavor, index: &str, arg: u64, trace: bool) -> Result<(), Failure> {
    let b = ctx.budget;
    let (name, eval) = match flavor {
        HardyFlavor::Fast | HardyFlavor::Collapsed => {
            if trace {
                return Err(Failure::Usage("traces are only kept by the step evaluators".into()));
            }
            let alpha = ordinal(ctx, index)?;
            let (name, v) = if flavor == HardyFlavor::Fast {
                ("F", fast_growing(&alpha, arg, &b)?)
            } else {
                ("collapsed", collapsed_hardy(&alpha, arg, &b)?)
            };
            return big_value(ctx, name, index, arg, &v);
        }
        HardyFlavor::HOrd => {
            let alpha = ordinal(ctx, index)?;
            ("H-ord", run(trace, || hardy_ord(&alpha, arg, &b), || hardy_ord_traced(&alpha, arg, &b, DEFAULT_TRACE_ENTRIES)))
        }
        HardyFlavor::HTree => {
            let t = tree(ctx, index)?;
            ("H-tree", run(trace, || hardy_tree(&t, arg, &b), || hardy_tree_traced(&t, arg, &b, DEFAULT_TRACE_ENTRIES)))
        }
        HardyFlavor::HTreeWorm => {
            let t = tree(ctx, index)?;
            (
                "h-tree",
                run(
                    trace,
                    || hardy_tree_wormstyle(&t, arg, &b),
                    || hardy_tree_wormstyle_traced(&t, arg, &b, DEFAULT_TRACE_ENTRIES),
                ),
            )
        }
        HardyFlavor::HWorm => {
            let a = worm(index)?;
            ("h-worm", run(trace, || hardy_worm(&a, arg, &b), || hardy_worm_traced(&a, arg, &b, DEFAULT_TRACE_ENTRIES)))
        }
    };
    if let Some(t) = &eval.trace {
        write_trace(ctx, t)?;
    }
    small_value(ctx, name, index, arg, eval.value?)
}

fn run(
    trace: bool,
    plain: impl FnOnce() -> Result<u64, ewd_core::BudgetExceeded>,
    traced: impl FnOnce() -> Evaluation,
) -> Evaluation {
    if trace {
        traced()
    } else {
        Evaluation { value: plain(), trace: None }
    }
}

pub fn translate(ctx: &mut Ctx, src: &str) -> Result<(), Failure> {
    let a = worm(src)?;
    let tau = a.tau()?;
    let o = tau.collapse();
    match ctx.format {
        Format::JsonLines => json_line(
            ctx,
            &json!({ "worm": a, "tau": tau, "o": o, "norm_tau": tau.norm(), "norm_o": o.norm() }),
        ),
        _ => {
            writeln!(ctx.out, "tau = {tau}")?;
            writeln!(ctx.out, "o = {o}")?;
            writeln!(ctx.out, "N(tau) = {}", tau.norm())?;
            writeln!(ctx.out, "N(o) = {}", o.norm())?;
            Ok(())
        }
    }
}

pub fn compare(ctx: &mut Ctx, left: &str, right: &str) -> Result<(), Failure> {
    let (a, b) = (worm(left)?, worm(right)?);
    let rel = match a.ordinal()?.cmp(&b.ordinal()?) {
        std::cmp::Ordering::Less => "<0",
        std::cmp::Ordering::Equal => "=0",
        std::cmp::Ordering::Greater => ">0",
    };
    match ctx.format {
        Format::JsonLines => json_line(ctx, &json!({ "left": a, "right": b, "relation": rel })),
        _ => Ok(writeln!(ctx.out, "{a} {rel} {b}")?),
    }
}

pub fn parse(ctx: &mut Ctx, src: &str, kind: TermKind) -> Result<(), Failure> {
    let (name, canonical) = match kind {
        TermKind::Ordinal => ("ordinal", ordinal(ctx, src)?.to_string()),
        TermKind::Tree => ("tree", tree(ctx, src)?.to_string()),
        TermKind::Worm => ("worm", worm(src)?.to_string()),
    };
    match ctx.format {
        Format::JsonLines => json_line(ctx, &json!({ "kind": name, "input": src, "canonical": canonical })),
        _ => Ok(writeln!(ctx.out, "{canonical}")?),
    }
}

/// Exit class of a batch of verdicts: a failure or a non-constant fitted
/// constant first, then any unknown.
fn outcome(reports: &[CheckReport], inconsistent: Option<&CheckReport>) -> Result<(), Failure> {
    if let Some(r) = reports.iter().find(|r| r.verdict == Verdict::Fail) {
        return Err(Failure::Check(format!("{} fails on {}", r.lemma, r.instance)));
    }
    if let Some(r) = inconsistent {
        return Err(Failure::Check(format!("{} has a non-constant shift at {}", r.lemma, r.instance)));
    }
    let unknown = reports.iter().filter(|r| r.verdict == Verdict::BudgetUnknown).count();
    if unknown > 0 {
        return Err(Failure::Unknown(format!("{unknown} checks ran out of budget")));
    }
    Ok(())
}

pub fn check_random(ctx: &mut Ctx, suite: &str, count: u64, seed: u64) -> Result<(), Failure> {
    let reports = ewd_lab::sweep_reports(suite, count, seed, &ctx.budget).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = ewd_lab::SweepReport::from_reports(suite, count, seed, ctx.budget, &reports);
    match ctx.format {
        Format::JsonLines => json_line(ctx, &report)?,
        _ => write!(ctx.out, "{report}")?,
    }
    outcome(&reports, report.inconsistent.first())
}

pub fn check_file(ctx: &mut Ctx, suite: &str, path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)?;
    let mut reports = Vec::new();
    for inst in serde_json::Deserializer::from_str(&text).into_iter::<Instance>() {
        let inst = inst.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if inst.suite() != suite {
            return Err(Failure::Usage(format!("instance {inst} belongs to suite {}, not {suite}", inst.suite())));
        }
        for r in check_instance(&inst, &ctx.budget) {
            match ctx.format {
                Format::JsonLines => json_line(ctx, &r)?,
                _ => {
                    writeln!(ctx.out, "{}: {} {}", r.lemma, r.verdict, r.instance)?;
                    for (k, v) in &r.witnesses {
                        writeln!(ctx.out, "    {k} = {v}")?;
                    }
                    if let Some(note) = &r.note {
                        writeln!(ctx.out, "    note: {note}")?;
                    }
                }
            }
            reports.push(r);
        }
    }
    if reports.is_empty() {
        return Err(Failure::Usage(format!("{}: no instances", path.display())));
    }
    outcome(&reports, None)
}
