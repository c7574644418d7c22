use onsager::cli::{run, OutputFormat};

fn main() {
    let format = match OutputFormat::from_env() {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let code = run(std::env::args_os(), format, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
