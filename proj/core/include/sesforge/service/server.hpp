#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>

#include "sesforge/rdf/namespaces.hpp"

namespace sesforge::service {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::filesystem::path registry_dir = "sesforge-registry";
    rdf::Namespaces namespaces;
    std::filesystem::path phrases;  // empty: built-in phrase table
    std::size_t max_upload_bytes = 8u << 20;

    // Throws Error when max_upload_bytes is 0 or the registry directory cannot be
    // created.
    void check() const;
};

// HTTP front end over one registry directory.
//
//   POST /convert      body: document, X-Format: owl|cxl|ttl, optional X-Case-Id
//   POST /cases/{id}   ingest (raw or normalized) and persist; 201 / 409
//   GET  /cases/{id}   canonical Turtle of the case
//   GET  /cases        one id per line
//   POST /query        body: query text; TSV rows
//   GET  /search?q=    "IRI<TAB>score" lines
//
// Reads run concurrently; mutations hold an exclusive lock and persist before
// they answer. Failed requests never touch the registry.
class Server {
public:
    explicit Server(ServiceConfig cfg);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    // Binds cfg.host; port 0 picks a free port. Returns the bound port.
    int bind();
    // Serves until stop(). bind() must have succeeded.
    void run();
    // Blocks until run() is accepting connections (for callers that run it on a thread).
    void wait_until_ready() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace sesforge::service
