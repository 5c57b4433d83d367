//! Driving the command-line front end from code with a RunConfig.

use cdop::cli::{execute, CommandKind, Format, RunConfig};
use cdop::SpaceParams;

fn main() -> cdop::Result<()> {
    let mut cfg = RunConfig::new(CommandKind::Norm);
    cfg.map = Some("dilation:0.85".into());
    cfg.alpha = Some(SpaceParams::new(0.5)?);
    cfg.format = Format::Json;

    println!("config as TOML:\n{}", toml::to_string(&cfg).expect("config serializes"));
    match execute(&cfg) {
        Ok(out) => print!("{}", out.text),
        Err(e) => eprintln!("exit {}: {}", e.code, e.message),
    }

    cfg.command = CommandKind::Counting;
    cfg.map = Some("poly:0,0,1".into());
    cfg.w = Some("0.25".into());
    cfg.format = Format::Human;
    match execute(&cfg) {
        Ok(out) => print!("{}", out.text),
        Err(e) => eprintln!("exit {}: {}", e.code, e.message),
    }
    Ok(())
}
