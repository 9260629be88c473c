use artin_core::complex::{characterize_pair, complex_ball, intersect, join, z_commute, LatticeResult};
use artin_core::config::Config;
use artin_core::conjugacy::{compute_summit_graph, support_action_dot, SummitGraph, SummitKind};
use artin_core::garside::word::format_positive_word;
use artin_core::garside::{GarsideStructure, GroupElement};
use artin_core::parabolic::parabolic_closure_with;
use artin_core::{Error, GeneratorSet, Group, Result};
use serde_json::{json, Value};

use crate::input::{element, load_group, parabolic};
use crate::{Cli, Command, Emitted, Format};

fn ok(text: String) -> Result<Emitted> {
    Ok(Emitted { text, code: 0 })
}

fn render(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Result<Emitted> {
    match format {
        Format::Text => ok(text()),
        Format::Json => ok(format!("{}\n", serde_json::to_string_pretty(&value()).expect("valid json"))),
        Format::Dot => Err(Error::Parse("DOT output is only available for graphs".into())),
    }
}

fn word(x: &GroupElement) -> String {
    match x.positive_word() {
        Some(w) if w.is_empty() => "1".into(),
        Some(w) => format_positive_word(&w),
        None => x.to_string(),
    }
}

fn indices(x: GeneratorSet) -> Vec<usize> {
    x.iter().map(|s| s.index() + 1).collect()
}

pub fn run(cli: &Cli, config: &Config) -> Result<Emitted> {
    let ctx = load_group(&cli.group, config)?;
    if cli.n == 0 {
        return Err(Error::Parse("--n must be at least 1".into()));
    }
    let s = GarsideStructure::new(&ctx, cli.n);
    let f = cli.format;
    match &cli.command {
        Command::Nf { word } => {
            let e = element(&ctx, word)?;
            let nf = s.normal_form(&e);
            render(
                f,
                || format!("{nf}\n"),
                || {
                    if cli.n == 1 {
                        e.to_json()
                    } else {
                        let factors: Vec<Vec<usize>> = nf
                            .factors
                            .iter()
                            .map(|x| x.positive_word().unwrap_or_default().iter().map(|g| g.index() + 1).collect())
                            .collect();
                        json!({"exponent": cli.n, "deltaPower": nf.delta_power, "factors": factors})
                    }
                },
            )
        }
        Command::Np { word: w } => {
            let np = element(&ctx, w)?.np_normal_form();
            render(
                f,
                || format!("({})^-1 · ({})\n", word(&np.negative), word(&np.positive)),
                || json!({"negative": np.negative.to_json(), "positive": np.positive.to_json()}),
            )
        }
        Command::Pn { word: w } => {
            let pn = element(&ctx, w)?.pn_normal_form();
            render(
                f,
                || format!("({}) · ({})^-1\n", word(&pn.positive), word(&pn.negative)),
                || json!({"positive": pn.positive.to_json(), "negative": pn.negative.to_json()}),
            )
        }
        Command::Supp { word } => {
            let x = element(&ctx, word)?.support();
            render(f, || format!("{x}\n"), || json!(indices(x)))
        }
        Command::Cycle { word } | Command::Decycle { word } | Command::Twist { word } => {
            let e = element(&ctx, word)?;
            let (r, c) = match cli.command {
                Command::Cycle { .. } => s.cycling(&e),
                Command::Decycle { .. } => s.decycling(&e),
                _ => s.twisted_cycling(&e),
            };
            render(
                f,
                || format!("result: {r}\nconjugator: {c}\n"),
                || json!({"result": r.to_json(), "conjugator": c.to_json()}),
            )
        }
        Command::Summit { kind, word } => {
            let kind = SummitKind::parse(kind)?;
            let e = element(&ctx, word)?;
            let g = compute_summit_graph(&e, kind, &s, config.su_max_power, config.max_graph_vertices)?;
            match f {
                Format::Dot => ok(g.to_dot()),
                _ => render(f, || graph_text(&g), || g.to_json()),
            }
        }
        Command::Closure { word } => {
            let p = parabolic_closure_with(&element(&ctx, word)?, config.stabilization_window)?;
            render(f, || format!("{p}\n"), || p.to_json())
        }
        Command::Phi { word } => {
            let p = parabolic_closure_with(&element(&ctx, word)?, config.stabilization_window)?;
            let v = p.delta_length();
            render(f, || format!("{v}\n"), || json!(v))
        }
        Command::Z { parabolic: arg } => {
            let p = parabolic(&ctx, arg)?;
            render(f, || format!("{}\n", p.z()), || p.z().to_json())
        }
        Command::Standardize { parabolic: arg } => {
            let p = parabolic(&ctx, arg)?;
            let (b, y) = p.minimal_standardizer();
            render(
                f,
                || format!("standardizer: {}\nbase: {y}\n", word(&b)),
                || json!({"standardizer": word(&b), "base": indices(y)}),
            )
        }
        Command::CommuteZ { p, q } => {
            let c = z_commute(&parabolic(&ctx, p)?, &parabolic(&ctx, q)?)?;
            render(f, || format!("{c}\n"), || json!(c))
        }
        Command::Adjacent { p, q, budget } => {
            let v = characterize_pair(&parabolic(&ctx, p)?, &parabolic(&ctx, q)?, budget.unwrap_or(config.intersect_budget))?;
            let condition = v.condition.map(|c| format!("{c:?}"));
            render(
                f,
                || format!("commute: {}\ncondition: {}\n", v.commute, condition.clone().unwrap_or_else(|| "none".into())),
                || json!({"commute": v.commute, "condition": condition}),
            )
        }
        Command::Intersect { p, q, budget } => {
            let r = intersect(&parabolic(&ctx, p)?, &parabolic(&ctx, q)?, budget.unwrap_or(config.intersect_budget))?;
            lattice_output(f, r)
        }
        Command::Join { p, q, budget } => {
            let r = join(&parabolic(&ctx, p)?, &parabolic(&ctx, q)?, budget.unwrap_or(config.join_budget))?;
            lattice_output(f, r)
        }
        Command::ComplexBall { p, radius, budget } => {
            let b = complex_ball(&parabolic(&ctx, p)?, *radius, budget.unwrap_or(config.conjugator_bound))?;
            match f {
                Format::Dot => ok(b.to_dot()),
                _ => render(
                    f,
                    || {
                        let mut out = String::new();
                        for (i, v) in b.vertices.iter().enumerate() {
                            out.push_str(&format!("v{i}: {v}\n"));
                        }
                        for (i, j) in &b.edges {
                            out.push_str(&format!("v{i} -- v{j}\n"));
                        }
                        out
                    },
                    || b.to_json(),
                ),
            }
        }
        Command::Figures => figures(&ctx, f),
    }
}

fn graph_text(g: &SummitGraph) -> String {
    let mut out = format!(
        "{} graph for Δ^{}: {} vertices, {} arrows\n",
        g.kind.name(),
        g.structure_exponent,
        g.vertices.len(),
        g.arrows.len()
    );
    if let Some(m) = g.su_max_power {
        out.push_str(&format!("SU membership tested for |m| ≤ {m}\n"));
    }
    for (i, v) in g.vertices.iter().enumerate() {
        out.push_str(&format!("v{i}: {v}\n"));
    }
    for a in &g.arrows {
        out.push_str(&format!("v{} -> v{} [{}]\n", a.from, a.to, word(&a.label)));
    }
    out
}

fn lattice_output(f: Format, r: LatticeResult) -> Result<Emitted> {
    let code = if r.certificate.complete { 0 } else { 3 };
    let mut out = render(
        f,
        || {
            let mut t = format!("{}\n", r.subgroup);
            if let Some(w) = &r.certificate.witness {
                t.push_str(&format!("witness: {w}\n"));
            }
            t.push_str(&format!("budget: {}\n", r.certificate.budget));
            for (name, holds) in &r.certificate.verified_inclusions {
                t.push_str(&format!("{name}: {holds}\n"));
            }
            t
        },
        || json!({"subgroup": r.subgroup.to_json(), "certificate": r.certificate.to_json()}),
    )?;
    out.code = code;
    Ok(out)
}

fn figures(ctx: &Group, f: Format) -> Result<Emitted> {
    if ctx.rank() < 2 {
        return Err(Error::Parse("figures need rank at least 2".into()));
    }
    let alpha = GroupElement::parse(ctx, "s1 s2")?;
    let g = compute_summit_graph(&alpha, SummitKind::PositiveConjugates, &GarsideStructure::classical(ctx), 1, 100_000)?;
    let action = g.support_action();
    match f {
        Format::Dot => ok(format!("{}{}", g.to_dot(), support_action_dot(&g))),
        _ => render(
            f,
            || {
                let mut t = String::from("Positive conjugates of s1 s2\n");
                t.push_str(&graph_text(&g));
                t.push_str("\nAction on central elements\n");
                let mut seen = Vec::new();
                for (zu, zv, x) in &action {
                    let line = format!("{} -> {} [{}]\n", word(zu), word(zv), word(x));
                    if !seen.contains(&line) {
                        t.push_str(&line);
                        seen.push(line);
                    }
                }
                t
            },
            || {
                let edges: Vec<Value> = action
                    .iter()
                    .map(|(zu, zv, x)| json!({"from": word(zu), "to": word(zv), "label": word(x)}))
                    .collect();
                json!({"graph": g.to_json(), "centralAction": edges})
            },
        ),
    }
}
