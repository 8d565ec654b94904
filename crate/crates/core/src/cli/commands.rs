use std::io::{Read, Write};
use std::path::Path;

use serde_json::json;

use crate::bounders::CheckMode;
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::graph::graph6;
use crate::graph::pattern::find_induced_pattern;
use crate::graph::Graph;
use crate::oracle::{self, Perfection};

use super::experiment::{Manifest, RunOptions};
use super::input::read_graphs;
use super::{exit_for, BoundArgs, CheckArgs, Command, EtaArgs, Exit, ExperimentArgs, GenArgs, GenKind, InputArgs};

pub(super) struct Context<'a> {
    pub stdin: &'a mut dyn Read,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub exit: Exit,
}

impl Context<'_> {
    pub fn raise(&mut self, exit: Exit) {
        self.exit = self.exit.max(exit);
    }

    /// Reports a per-graph failure and keeps going.
    fn report(&mut self, line: usize, graph: Option<&Graph>, e: &Error) -> Result<()> {
        match graph {
            Some(g) => writeln!(self.err, "line {line}: {}: {e}", graph6::encode(g)),
            None => writeln!(self.err, "line {line}: {e}"),
        }
        .map_err(io)?;
        self.raise(exit_for(e));
        Ok(())
    }

    fn read_input(&mut self, args: &InputArgs) -> Result<String> {
        match args.input.as_deref() {
            Some(path) if path != Path::new("-") => {
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
            }
            _ => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text).map_err(io)?;
                Ok(text)
            }
        }
    }

    /// Runs `f` on every graph of the input, reporting bad lines.
    fn for_each_graph(&mut self, args: &InputArgs, mut f: impl FnMut(&mut Self, &Graph) -> Result<()>) -> Result<()> {
        let text = self.read_input(args)?;
        for (line, parsed) in read_graphs(&text, args.format) {
            match parsed {
                Ok(g) => {
                    if let Err(e) = f(self, &g) {
                        if let Error::Io(_) = e {
                            return Err(e);
                        }
                        self.report(line, Some(&g), &e)?;
                    }
                }
                Err(e) => self.report(line, None, &e)?,
            }
        }
        Ok(())
    }
}

pub(super) fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

pub(super) fn dispatch(command: &Command, ctx: &mut Context<'_>) -> Result<()> {
    match command {
        Command::Eta(args) => eta(args, ctx),
        Command::Bound(args) => bound(args, ctx),
        Command::Check(args) => check(args, ctx),
        Command::Gen(args) => gen(args, ctx),
        Command::Experiment(args) => experiment(args, ctx),
    }
}

fn eta(args: &EtaArgs, ctx: &mut Context<'_>) -> Result<()> {
    ctx.for_each_graph(&args.input, |ctx, g| {
        let view = g.view();
        let alpha = oracle::alpha_number(&view);
        let omega = oracle::omega_number(&view);
        let exact = if args.exact { Some(oracle::eta_exact(&view, args.cap)?) } else { None };
        let code = graph6::encode(g);
        if args.json {
            let mut row = json!({ "graph": code, "n": g.n(), "alpha": alpha, "omega": omega });
            if let Some((eta, w)) = exact {
                row["eta"] = json!(eta);
                row["witness"] = json!(w);
            }
            writeln!(ctx.out, "{row}").map_err(io)
        } else {
            write!(ctx.out, "{code} n={} alpha={alpha} omega={omega}", g.n()).map_err(io)?;
            if let Some((eta, w)) = exact {
                write!(ctx.out, " eta={eta} witness={w}").map_err(io)?;
            }
            writeln!(ctx.out).map_err(io)
        }
    })
}

fn bound(args: &BoundArgs, ctx: &mut Context<'_>) -> Result<()> {
    let mode = if args.no_check { CheckMode::Lazy } else { CheckMode::Strict };
    ctx.for_each_graph(&args.input, |ctx, g| {
        let view = g.view();
        let cert = args.class.run(&view, mode)?;
        let verified = oracle::verify_hitting_set(&view, cert.hitting_set)?;
        if !verified {
            ctx.raise(Exit::Unverified);
        }
        let code = graph6::encode(g);
        if args.json {
            let row = json!({ "graph": code, "n": g.n(), "class": args.class, "verified": verified, "certificate": cert });
            writeln!(ctx.out, "{row}").map_err(io)
        } else {
            writeln!(
                ctx.out,
                "{code} class={} omega={} size={} bound={} verified={verified} W={}",
                args.class,
                cert.params.c,
                cert.size(),
                cert.claimed_bound,
                cert.hitting_set
            )
            .map_err(io)
        }
    })
}

fn check(args: &CheckArgs, ctx: &mut Context<'_>) -> Result<()> {
    if args.free.is_empty() && !args.perfect {
        return Err(Error::InvalidParameter("nothing to check: pass --free or --perfect".into()));
    }
    ctx.for_each_graph(&args.input, |ctx, g| {
        let view = g.view();
        let code = graph6::encode(g);
        for pattern in &args.free {
            match find_induced_pattern(&view, pattern) {
                None => writeln!(ctx.out, "{code} {pattern}: free"),
                Some(w) => {
                    let w: Vec<String> = w.iter().map(usize::to_string).collect();
                    writeln!(ctx.out, "{code} {pattern}: not free, witness {}", w.join(" "))
                }
            }
            .map_err(io)?;
        }
        if args.perfect {
            match oracle::is_perfect_lovasz(&view, args.cap)? {
                Perfection::Perfect => writeln!(ctx.out, "{code} perfect: yes"),
                Perfection::Imperfect(w) => {
                    let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                    writeln!(ctx.out, "{code} perfect: no, witness {}", w.join(" "))
                }
            }
            .map_err(io)?;
        }
        Ok(())
    })
}

fn gen_spec(args: &GenArgs) -> Result<GenSpec> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| Error::InvalidParameter(format!("--kind {:?} needs --{flag}", args.kind)))
    };
    let p = || {
        args.p
            .ok_or_else(|| Error::InvalidParameter(format!("--kind {:?} needs --p", args.kind)))
    };
    let (seed, count) = (args.seed, args.count);
    Ok(match args.kind {
        GenKind::Gnp => GenSpec::Gnp { n: need(args.n, "n")?, p: p()?, seed, count },
        GenKind::HFree => GenSpec::HFree {
            n: need(args.n, "n")?,
            p: p()?,
            seed,
            pattern: args
                .pattern
                .clone()
                .ok_or_else(|| Error::InvalidParameter("--kind h-free needs --pattern".into()))?,
            max_tries: args.max_tries,
            count,
        },
        GenKind::Split => GenSpec::Split {
            clique: need(args.clique, "clique")?,
            stable: need(args.stable, "stable")?,
            p: p()?,
            seed,
            count,
        },
        GenKind::Cograph => GenSpec::Cograph { n: need(args.n, "n")?, seed, count },
        GenKind::Exhaustive => GenSpec::Exhaustive { n: need(args.n, "n")?, from: args.from },
        GenKind::LineGraph => GenSpec::LineGraph { n: need(args.n, "n")?, p: p()?, seed, count },
        GenKind::CoBipartite => GenSpec::CoBipartite {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            p: p()?,
            seed,
            count,
        },
    })
}

fn gen(args: &GenArgs, ctx: &mut Context<'_>) -> Result<()> {
    for g in gen_spec(args)?.generate()? {
        writeln!(ctx.out, "{}", graph6::encode(&g)).map_err(io)?;
    }
    Ok(())
}

fn experiment(args: &ExperimentArgs, ctx: &mut Context<'_>) -> Result<()> {
    let mut manifest = Manifest::load(&args.manifest)?;
    if let Some(path) = &args.output {
        manifest.output = Some(path.clone());
    }
    if let Some(path) = &args.json {
        manifest.json_output = Some(path.clone());
    }
    let opts = RunOptions {
        reproducible: args.reproducible,
        allow_unverified: args.allow_unverified || manifest.allow_unverified,
        threads: args.threads,
    };
    let report = manifest.run(&opts)?;
    match &manifest.output {
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            report.write_csv(&mut file)?;
            writeln!(ctx.err, "wrote {} rows to {}", report.rows.len(), path.display()).map_err(io)?;
        }
        None => report.write_csv(ctx.out)?,
    }
    if let Some(path) = manifest.json_path() {
        let text = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(&path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    for row in report.rows.iter().filter(|r| r.error.is_some()) {
        writeln!(ctx.err, "{} {}: {}", row.graph, row.route, row.error.as_deref().unwrap_or_default()).map_err(io)?;
    }
    ctx.raise(report.exit());
    Ok(())
}
