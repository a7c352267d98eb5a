#include <csignal>
#include <filesystem>
#include <iostream>

#include <httplib.h>

#include "clima/api.hpp"
#include "clima/version.hpp"

namespace {
httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main(int argc, char** argv) {
  using namespace clima::service;
  try {
    ServiceConfig defaults;
    const auto data_dir = std::filesystem::path(CLIMA_DATA_DIR);
    defaults.catalogs = {data_dir / "stations.csv"};
    auto config = config_from_env(defaults);
    if (argc > 1) config.port = std::stoi(argv[1]);

    auto index = load_catalogs(config.catalogs);
    FetchOptions fetch_options;
    fetch_options.cache_dir = config.cache_dir;
    auto fetch = std::make_shared<FetchClient>(fetch_options);

    Api api(config, index, fetch);
    httplib::Server server;
    api.install(server);
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);

    std::cerr << "clima " << clima::version() << " listening on " << config.bind_address << ':' << config.port << " ("
              << index->size() << " stations)\n";
    if (!server.listen(config.bind_address, config.port)) {
      std::cerr << "cannot listen on " << config.bind_address << ':' << config.port << '\n';
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "startup failed: " << e.what() << '\n';
    return 1;
  }
}
