mod generators;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use wordrep::codes::{default_probe_len, is_synchronizing, x_degree, x_interpretations, CodeSet};
use wordrep::feinj::{
    classify_binary, classify_general_with, fe_inj_lower_bound, highpower_word, lowpower_morphism,
    pump_witness, reembed_binary, FeInjVerdict, SearchConfig, VerdictTag,
};
use wordrep::infinite::ace_estimate;
use wordrep::word_core::{exponent_of, fractional_exponent, integer_exponent};
use wordrep::{Error, Rational, Word};

#[derive(Parser)]
#[command(
    name = "wordrep",
    version,
    about = "Exponents of words under injective morphisms"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Lowpower,
    Highpower,
}

#[derive(Subcommand)]
enum Command {
    /// Fractional and integer exponent of a word.
    Exp { word: String },
    /// Decide whether injective images of WORD reach unbounded exponent.
    Classify {
        word: String,
        #[arg(long, default_value_t = 3)]
        max_image_len: usize,
    },
    /// Build an injective morphism whose image of WORD reaches the target.
    Witness {
        word: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 3)]
        max_image_len: usize,
        /// Re-embed the witness into {0,1}.
        #[arg(long)]
        binary: bool,
    },
    /// Best exponent over injective morphisms with bounded images.
    LowerBound {
        word: String,
        #[arg(long)]
        max_image_len: usize,
        /// Size of the target alphabet (letters 0-9a-z).
        #[arg(long)]
        codomain: usize,
    },
    /// X-interpretations and X-degree of WORD.
    Xdegree {
        word: String,
        #[arg(long)]
        code: String,
    },
    /// Test whether WORD is synchronizing for a code.
    Sync {
        word: String,
        #[arg(long)]
        code: String,
        #[arg(long)]
        probe: Option<usize>,
    },
    /// Per-length maximal exponents on a prefix of a generated word.
    Ace {
        #[arg(long)]
        gen: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        prefix: usize,
        #[arg(long)]
        tail: usize,
    },
    /// Print a prefix of a generated word.
    Generate {
        #[arg(long)]
        gen: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        prefix: usize,
    },
    /// Instances of the example families, checked against their exponent.
    Family {
        #[arg(value_enum)]
        which: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Analysis(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Usage(e.to_string()),
            other => CliError::Analysis(other.to_string()),
        }
    }
}

/// One command result in all three output formats.
struct Report {
    text: String,
    json: Value,
    csv: String,
}

fn csv_row(header: &str, values: &[String]) -> String {
    let quoted: Vec<String> = values
        .iter()
        .map(|v| {
            if v.contains([',', '"', '\n']) {
                format!("\"{}\"", v.replace('"', "\"\""))
            } else {
                v.clone()
            }
        })
        .collect();
    format!("{header}\n{}\n", quoted.join(","))
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a rational p/q"));
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    Ok(Word::parse(text)?)
}

fn parse_code(text: &str) -> Result<CodeSet, CliError> {
    Ok(CodeSet::parse(text)?)
}

fn exp(word: &str) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let fp = fractional_exponent(&w)?;
    let (ie, root) = integer_exponent(&w)?;
    Ok(Report {
        text: format!(
            "E = {} (base {}); IE = {ie} (root {root})\n",
            fp.exponent, fp.base
        ),
        json: json!({
            "word": word,
            "exponent": fp.exponent.to_string(),
            "base": fp.base.to_string(),
            "integer_exponent": ie,
            "root": root.to_string(),
        }),
        csv: csv_row(
            "word,exponent_num,exponent_den,base,integer_exponent,root",
            &[
                word.into(),
                fp.exponent.numer().to_string(),
                fp.exponent.denom().to_string(),
                fp.base.to_string(),
                ie.to_string(),
                root.to_string(),
            ],
        ),
    })
}

#[derive(Serialize)]
struct VerdictRecord {
    tag: String,
    witness_morphism: Option<String>,
    achieved_exponent: Option<String>,
    search_bound: Option<usize>,
}

fn classify_word(w: &Word, config: &SearchConfig) -> Result<FeInjVerdict, CliError> {
    // the binary test is exact, so prefer it when it applies
    if w.letters_used().len() <= 2 && config.target.is_none() {
        Ok(classify_binary(w)?)
    } else {
        Ok(classify_general_with(w, config)?)
    }
}

fn classify(word: &str, max_image_len: usize) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let config = SearchConfig {
        max_image_len,
        ..SearchConfig::default()
    };
    let v = classify_word(&w, &config)?;
    let record = VerdictRecord {
        tag: v.tag.to_string(),
        witness_morphism: v.witness.as_ref().map(|x| x.morphism.to_string()),
        achieved_exponent: v.witness.as_ref().map(|x| x.exponent.to_string()),
        search_bound: v.search_bound,
    };
    let mut text = format!("tag: {}\n", v.tag);
    if let Some(fact) = &v.certificate {
        text += &format!("split: {fact}\n");
    }
    if let Some(x) = &v.witness {
        text += &format!(
            "witness: {}\nachieved exponent: {}\n",
            x.morphism, x.exponent
        );
    }
    if let Some(b) = v.search_bound {
        text += &format!("search bound: images up to {b} letters\n");
    }
    let opt = |o: &Option<String>| o.clone().unwrap_or_default();
    Ok(Report {
        text,
        csv: csv_row(
            "tag,witness_morphism,achieved_exponent,search_bound",
            &[
                record.tag.clone(),
                opt(&record.witness_morphism),
                opt(&record.achieved_exponent),
                record
                    .search_bound
                    .map(|b| b.to_string())
                    .unwrap_or_default(),
            ],
        ),
        json: serde_json::to_value(&record).expect("serializable"),
    })
}

fn witness(
    word: &str,
    target: &str,
    max_image_len: usize,
    binary: bool,
) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let target = parse_rational(target)?;
    let config = SearchConfig {
        max_image_len,
        target: Some(target),
        ..SearchConfig::default()
    };
    let v = classify_word(&w, &config)?;
    if v.tag != VerdictTag::Infinite {
        let why = match v.search_bound {
            Some(b) => format!("{w} is {} (images searched up to {b} letters)", v.tag),
            None => format!("{w} is {}: no injective image exceeds exponent |w|", v.tag),
        };
        return Err(CliError::Analysis(why));
    }
    let fact = v.certificate.as_ref().expect("certificate on Infinite");
    let base = v.base.as_ref().expect("base on Infinite");
    let mut pumped = pump_witness(&w, fact, base, target)?;
    if binary {
        pumped = reembed_binary(&pumped, &w)?;
    }
    let image = pumped.morphism.apply(&w)?;
    let verified = exponent_of(image.as_bytes());
    if verified != pumped.exponent || verified < target {
        return Err(CliError::Analysis(format!(
            "witness reached {verified}, below {target}"
        )));
    }
    Ok(Report {
        text: format!(
            "morphism: {}\nexponent: {} (target {target})\nimage length: {}\n",
            pumped.morphism,
            pumped.exponent,
            image.len()
        ),
        json: json!({
            "word": word,
            "target": target.to_string(),
            "morphism": pumped.morphism.to_string(),
            "exponent": pumped.exponent.to_string(),
            "image_length": image.len(),
        }),
        csv: csv_row(
            "word,target,morphism,exponent,image_length",
            &[
                word.into(),
                target.to_string(),
                pumped.morphism.to_string(),
                pumped.exponent.to_string(),
                image.len().to_string(),
            ],
        ),
    })
}

fn lower_bound(word: &str, max_image_len: usize, codomain: usize) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let best = fe_inj_lower_bound(&w, max_image_len, codomain)?;
    Ok(Report {
        text: format!(
            "E = {} under {} (index {}; images up to {max_image_len} letters over {codomain} letters)\n",
            best.exponent, best.morphism, best.index
        ),
        json: json!({
            "word": word,
            "exponent": best.exponent.to_string(),
            "morphism": best.morphism.to_string(),
            "index": best.index,
            "max_image_len": max_image_len,
            "codomain_size": codomain,
        }),
        csv: csv_row(
            "word,exponent_num,exponent_den,morphism,index",
            &[
                word.into(),
                best.exponent.numer().to_string(),
                best.exponent.denom().to_string(),
                best.morphism.to_string(),
                best.index.to_string(),
            ],
        ),
    })
}

fn xdegree(word: &str, code: &str) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let x = parse_code(code)?;
    let all = x_interpretations(&w, &x)?;
    let degree = x_degree(&w, &x)?;
    let mut text = format!("X-degree = {degree} ({} interpretations)\n", all.len());
    let mut csv = String::from("index,pieces,cuts\n");
    let mut rows = Vec::new();
    for (i, it) in all.iter().enumerate() {
        text += &format!("  {it}\n");
        let pieces: Vec<String> = it.pieces.iter().map(|p| p.to_string()).collect();
        let cuts: Vec<String> = it.cuts.iter().map(|c| c.to_string()).collect();
        csv += &format!("{i},{},{}\n", pieces.join("|"), cuts.join("|"));
        rows.push(json!({ "pieces": pieces, "cuts": it.cuts }));
    }
    Ok(Report {
        text,
        json: json!({
            "word": word,
            "code": x.to_string(),
            "degree": degree,
            "interpretations": rows,
        }),
        csv,
    })
}

fn sync(word: &str, code: &str, probe: Option<usize>) -> Result<Report, CliError> {
    let w = parse_word(word)?;
    let x = parse_code(code)?;
    let probe = probe.unwrap_or_else(|| default_probe_len(&w, &x));
    let split = is_synchronizing(&w, &x, probe)?;
    let text = match split {
        Some(t) => format!(
            "synchronizing at {t}: {}|{} (contexts up to length {probe})\n",
            w.prefix(t),
            w.suffix(w.len() - t)
        ),
        None => format!("not synchronizing (contexts up to length {probe})\n"),
    };
    Ok(Report {
        text,
        json: json!({ "word": word, "code": x.to_string(), "split": split, "probe_len": probe }),
        csv: csv_row(
            "word,split,probe_len",
            &[
                word.into(),
                split.map(|t| t.to_string()).unwrap_or_default(),
                probe.to_string(),
            ],
        ),
    })
}

fn ace(gen: &str, params: &str, prefix: usize, tail: usize) -> Result<Report, CliError> {
    let mut g = generators::build(gen, params)?;
    let est = ace_estimate(&mut g, prefix, tail)?;
    let ex = &est.extremal;
    let curve: Vec<Value> = est
        .curve
        .iter()
        .map(|p| json!({ "length": p.length, "exponent": p.exponent.to_string(), "offset": p.offset }))
        .collect();
    Ok(Report {
        text: format!(
            "estimate = {} over factors of length >= {tail} in a prefix of {prefix}\nextremal factor: length {} at offset {}\n",
            est.estimate,
            ex.factor.len(),
            ex.offset
        ),
        json: json!({
            "generator": gen,
            "prefix_len": prefix,
            "tail": tail,
            "estimate": est.estimate.to_string(),
            "extremal_offset": ex.offset,
            "extremal_length": ex.factor.len(),
            "curve": curve,
        }),
        csv: est.to_csv(),
    })
}

fn generate(gen: &str, params: &str, prefix: usize) -> Result<Report, CliError> {
    let mut g = generators::build(gen, params)?;
    let w = g.prefix(prefix)?;
    Ok(Report {
        text: format!("{w}\n"),
        json: json!({ "generator": gen, "prefix": w.to_string() }),
        csv: csv_row("generator,prefix", &[gen.into(), w.to_string()]),
    })
}

fn family(which: Family, n: usize, k: usize) -> Result<Report, CliError> {
    let (name, inst) = match which {
        Family::Lowpower => ("lowpower", lowpower_morphism(n, k)?),
        Family::Highpower => ("highpower", highpower_word(n)?),
    };
    let image = inst.morphism.apply(&inst.word)?;
    let computed = exponent_of(image.as_bytes());
    if computed != inst.expected {
        return Err(CliError::Analysis(format!(
            "{name}: computed {computed}, expected {}",
            inst.expected
        )));
    }
    Ok(Report {
        text: format!(
            "word: {}\nmorphism: {}\nexpected exponent: {}\ncomputed exponent: {computed} (verified)\n",
            inst.word, inst.morphism, inst.expected
        ),
        json: json!({
            "family": name,
            "word": inst.word.to_string(),
            "morphism": inst.morphism.to_string(),
            "expected": inst.expected.to_string(),
            "computed": computed.to_string(),
            "verified": true,
        }),
        csv: csv_row(
            "family,word,morphism,expected,computed",
            &[
                name.into(),
                inst.word.to_string(),
                inst.morphism.to_string(),
                inst.expected.to_string(),
                computed.to_string(),
            ],
        ),
    })
}

fn run(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Exp { word } => exp(&word),
        Command::Classify {
            word,
            max_image_len,
        } => classify(&word, max_image_len),
        Command::Witness {
            word,
            target,
            max_image_len,
            binary,
        } => witness(&word, &target, max_image_len, binary),
        Command::LowerBound {
            word,
            max_image_len,
            codomain,
        } => lower_bound(&word, max_image_len, codomain),
        Command::Xdegree { word, code } => xdegree(&word, &code),
        Command::Sync { word, code, probe } => sync(&word, &code, probe),
        Command::Ace {
            gen,
            params,
            prefix,
            tail,
        } => ace(&gen, &params, prefix, tail),
        Command::Generate {
            gen,
            params,
            prefix,
        } => generate(&gen, &params, prefix),
        Command::Family { which, n, k } => family(which, n, k),
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: usize) -> Result<(), CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("--threads {threads}: {e}")))
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(threads: usize) -> Result<(), CliError> {
    if threads > 1 {
        eprintln!("warning: built without parallel support; --threads {threads} ignored");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = configure_threads(cli.threads).and_then(|()| run(cli.command));
    match result {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.text),
                // Value keeps keys sorted, so the output re-serializes unchanged
                Format::Json => println!("{}", report.json),
                Format::Csv => print!("{}", report.csv),
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Analysis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
