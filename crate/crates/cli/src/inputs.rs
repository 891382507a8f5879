//! Argument decoding: tables, presentations, group specs.

use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

use quandle_core::groups::{coxeter_system, dihedral_group, symmetric_group, CoxeterType, FiniteGroup};
use quandle_core::presentation::{parse, resolve_builtin, Builtin};
use quandle_core::quandle::QuandleJson;
use quandle_core::{FiniteQuandle, PermGroup, Permutation};

fn read_text(path: Option<&PathBuf>) -> Result<String> {
    match path.filter(|p| p.as_os_str() != "-") {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

/// Loads a JSON table; `None` or `-` reads stdin.
pub fn read_table(path: Option<&PathBuf>, unchecked: bool) -> Result<FiniteQuandle> {
    let text = read_text(path)?;
    let json = QuandleJson::parse(&text)?;
    Ok(if unchecked { json.into_quandle_unchecked()? } else { json.into_quandle()? })
}

/// A built-in name, inline DSL text, or a file holding DSL text.
pub fn presentation(arg: &str) -> Result<Builtin> {
    if let Some(b) = resolve_builtin(arg) {
        return Ok(b?);
    }
    let trimmed = arg.trim_start();
    let text = if (trimmed.starts_with("quandle") || trimmed.starts_with("group")) && arg.contains('<') {
        arg.to_string()
    } else if Path::new(arg).is_file() || arg == "-" {
        read_text(Some(&PathBuf::from(arg)))?
    } else {
        bail!("`{arg}` is not a built-in, a presentation, or a readable file");
    };
    Ok(parse(&text)?.into())
}

/// `S<n>`, `D<m>`, a Coxeter type, or `DEG:CYCLES;CYCLES;..`. Returns the
/// group and its generators.
pub fn group(spec: &str) -> Result<(PermGroup, Vec<Permutation>)> {
    let spec = spec.trim();
    if let Some((deg, gens)) = spec.split_once(':') {
        let degree: usize = deg.trim().parse().context("bad degree")?;
        if degree == 0 || degree > 64 {
            bail!("degree must be in 1..=64");
        }
        let gens = gens
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<quandle_core::Result<Vec<_>>>()?;
        let g = PermGroup::generate(degree, gens.clone(), quandle_core::groups::DEFAULT_GROUP_CAP)?;
        return Ok((g, gens));
    }
    let number = |rest: &str| rest.trim_matches(|c| c == '(' || c == ')').parse::<usize>();
    if let Some(Ok(n)) = spec.strip_prefix('S').map(number) {
        let g = symmetric_group(n)?;
        let gens = g.generators().to_vec();
        return Ok((g, gens));
    }
    if let Some(Ok(m)) = spec.strip_prefix('D').map(number) {
        let g = dihedral_group(m)?;
        let gens = g.generators().to_vec();
        return Ok((g, gens));
    }
    let ty: CoxeterType = spec.parse().with_context(|| format!("unknown group `{spec}`"))?;
    Ok(coxeter_system(ty)?)
}

/// `all`, `gens`, or `;`-separated cycle notation.
pub fn subset(spec: &str, g: &PermGroup, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    match spec.trim() {
        "all" => Ok(g.elements().to_vec()),
        "gens" | "generators" => Ok(gens.to_vec()),
        text => Ok(text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Permutation::parse_cycles(g.degree(), s))
            .collect::<quandle_core::Result<Vec<_>>>()?),
    }
}
