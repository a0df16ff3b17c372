//! Generator selection by name and `key=value;key=value` parameters.

use std::collections::BTreeMap;

use wordrep::infinite::{
    big_acei_generator, morphic_generator, optimal_binary_generator, periodic_generator,
    WordGenerator,
};
use wordrep::{Morphism, Word};

use crate::CliError;

pub const NAMES: &str = "periodic, thue-morse, fibonacci, morphic, big-acei, optimal-binary";

struct Params {
    gen: String,
    map: BTreeMap<String, String>,
}

impl Params {
    fn parse(gen: &str, text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for part in text.split(';').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter `{part}` is not key=value")))?;
            if map
                .insert(k.trim().to_string(), v.trim().to_string())
                .is_some()
            {
                return Err(CliError::Usage(format!("parameter `{k}` given twice")));
            }
        }
        Ok(Params {
            gen: gen.to_string(),
            map,
        })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key)
    }

    fn number(&mut self, key: &str, default: Option<usize>) -> Result<usize, CliError> {
        match self.take(key) {
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Usage(format!("{}: `{key}={v}` is not a number", self.gen))),
            None => default
                .ok_or_else(|| CliError::Usage(format!("{}: missing parameter `{key}`", self.gen))),
        }
    }

    fn finish(self) -> Result<(), CliError> {
        match self.map.keys().next() {
            Some(k) => Err(CliError::Usage(format!(
                "{}: unknown parameter `{k}`",
                self.gen
            ))),
            None => Ok(()),
        }
    }
}

fn base_generator(name: &str) -> Result<WordGenerator, CliError> {
    match name {
        "thue-morse" => Ok(WordGenerator::thue_morse()),
        "fibonacci" => Ok(WordGenerator::fibonacci()),
        other => Err(CliError::Usage(format!(
            "base `{other}` (expected thue-morse or fibonacci)"
        ))),
    }
}

pub fn build(name: &str, params: &str) -> Result<WordGenerator, CliError> {
    let mut p = Params::parse(name, params)?;
    let gen = match name {
        "periodic" => {
            let word = p
                .take("word")
                .ok_or_else(|| CliError::Usage("periodic: missing parameter `word`".into()))?;
            periodic_generator(&Word::parse(&word)?)?
        }
        "thue-morse" => WordGenerator::thue_morse(),
        "fibonacci" => WordGenerator::fibonacci(),
        "morphic" => {
            let text = p
                .take("morphism")
                .ok_or_else(|| CliError::Usage("morphic: missing parameter `morphism`".into()))?;
            let g = Morphism::parse(&text)?;
            let seed = match p.take("seed") {
                Some(s) if s.len() == 1 => s.as_bytes()[0],
                Some(s) => {
                    return Err(CliError::Usage(format!(
                        "morphic: seed `{s}` is not one letter"
                    )))
                }
                None => g.domain().iter().next().ok_or(wordrep::Error::EmptyInput)?,
            };
            morphic_generator(g, seed)?
        }
        "big-acei" => {
            let n = p.number("n", None)?;
            let base = base_generator(&p.take("base").unwrap_or_else(|| "thue-morse".into()))?;
            big_acei_generator(n, base)?
        }
        "optimal-binary" => {
            let n = p.number("n", None)?;
            let k = p.number("k", None)?;
            let m = p.number("m", None)?;
            let base = base_generator(&p.take("base").unwrap_or_else(|| "thue-morse".into()))?;
            optimal_binary_generator(n, k, m, base)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown generator `{other}` (expected one of: {NAMES})"
            )))
        }
    };
    p.finish()?;
    Ok(gen)
}
