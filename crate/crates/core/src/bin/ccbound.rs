fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CC_LOG")).init();
    let code = convex_components::cli::main_from_args(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
