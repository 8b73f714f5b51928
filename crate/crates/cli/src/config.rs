//! Optional `key=value` config file. Keys are long flag names without the
//! leading dashes; whatever is given on the command line wins.

use std::ffi::OsString;
use std::fs;

use anyhow::{bail, Context, Result};
use clap::{ArgAction, Command};

pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("config line {}: expected key=value, got {line:?}", i + 1);
        };
        let v = v.trim().trim_matches('"');
        out.push((k.trim().to_string(), v.to_string()));
    }
    Ok(out)
}

fn given(argv: &[OsString], key: &str) -> bool {
    let flag = format!("--{key}");
    argv.iter().any(|a| {
        a.to_str()
            .is_some_and(|a| a == flag || a.strip_prefix(&flag).is_some_and(|r| r.starts_with('=')))
    })
}

/// Appends config entries that the command line does not already set.
/// Keys unknown to every subcommand are an error; keys belonging to a
/// different subcommand than the one invoked are skipped.
pub fn merge(
    cmd: &Command,
    sub: &str,
    path: &str,
    mut argv: Vec<OsString>,
) -> Result<Vec<OsString>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading config {path}"))?;
    let known = |c: &Command, key: &str| {
        c.get_arguments()
            .find(|a| a.get_long() == Some(key))
            .map(|a| matches!(a.get_action(), ArgAction::SetTrue))
    };
    let sub_cmd = cmd
        .find_subcommand(sub)
        .expect("clap matched this subcommand");
    for (key, value) in parse(&text)? {
        if key == "config" {
            bail!("config files cannot include other config files");
        }
        let is_flag = match known(sub_cmd, &key).or_else(|| known(cmd, &key)) {
            Some(f) => f,
            None if cmd.get_subcommands().any(|c| known(c, &key).is_some()) => continue,
            None => bail!("unknown config key {key:?}"),
        };
        if given(&argv, &key) {
            continue;
        }
        if is_flag {
            match value.as_str() {
                "true" | "1" | "yes" => argv.push(format!("--{key}").into()),
                "false" | "0" | "no" => {}
                _ => bail!("config key {key:?} expects true or false"),
            }
        } else {
            argv.push(format!("--{key}={value}").into());
        }
    }
    Ok(argv)
}
