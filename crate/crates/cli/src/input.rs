use std::io::Read;

use artin_core::config::Config;
use artin_core::garside::GroupElement;
use artin_core::parabolic::ParabolicSubgroup;
use artin_core::{build_context_with_cap, CoxeterSpec, Error, GeneratorId, GeneratorSet, Group, Result};

pub fn load_group(token: &str, config: &Config) -> Result<Group> {
    let spec = if token.eq_ignore_ascii_case("custom") {
        let m = config
            .coxeter_matrix
            .as_ref()
            .ok_or_else(|| Error::Parse("`custom` needs coxeterMatrix in the config file".into()))?;
        CoxeterSpec::from_matrix(m.clone())?
    } else {
        CoxeterSpec::parse(token)?
    };
    build_context_with_cap(spec, config.rank_cap)
}

/// The argument itself, or standard input when it is `-`.
fn text(arg: &str) -> Result<String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    Ok(buf.trim().to_string())
}

pub fn element(ctx: &Group, arg: &str) -> Result<GroupElement> {
    GroupElement::parse(ctx, &text(arg)?)
}

/// `BASE` or `BASE:CONJUGATOR`, where `BASE` lists generators as `1,2`,
/// `s1,s2`, `all`, or is empty; the subgroup is `g·A_BASE·g^{-1}`.
pub fn parabolic(ctx: &Group, arg: &str) -> Result<ParabolicSubgroup> {
    let raw = text(arg)?;
    let (base, conj) = match raw.split_once(':') {
        Some((b, c)) => (b.trim(), c.trim()),
        None => (raw.trim(), ""),
    };
    let base = base.trim_matches(|c| c == '{' || c == '}');
    let set = if base.eq_ignore_ascii_case("all") {
        ctx.all_generators()
    } else {
        let mut set = GeneratorSet::EMPTY;
        for item in base.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            let digits = item.trim_start_matches(['s', 'σ']);
            let i: usize = digits.parse().map_err(|_| Error::Parse(format!("bad generator `{item}`")))?;
            if i == 0 || i > ctx.rank() {
                return Err(Error::Parse(format!("generator `{item}` out of range")));
            }
            set.insert(GeneratorId((i - 1) as u8));
        }
        set
    };
    let g = GroupElement::parse(ctx, conj)?;
    Ok(ParabolicSubgroup::new(&g, set))
}
