#include "sesforge/service/server.hpp"

#include <httplib.h>

#include <mutex>
#include <shared_mutex>

#include "sesforge/io/turtle.hpp"
#include "sesforge/service/pipeline.hpp"
#include "sesforge/store/query.hpp"
#include "sesforge/store/registry.hpp"

namespace sesforge::service {

void ServiceConfig::check() const {
    if (max_upload_bytes == 0) throw Error("max upload bytes must be positive");
    std::error_code ec;
    std::filesystem::create_directories(registry_dir, ec);
    if (ec || !std::filesystem::is_directory(registry_dir)) {
        throw Error("registry directory " + registry_dir.string() + " cannot be created");
    }
}

struct Server::Impl {
    ServiceConfig cfg;
    store::Registry reg;
    io::PhraseTable phrases;
    std::shared_mutex mutex;
    httplib::Server http;

    explicit Impl(ServiceConfig c)
        : cfg((c.check(), std::move(c))),
          reg(store::load(cfg.registry_dir, cfg.namespaces)),
          phrases(load_phrases(cfg.phrases, rdf::PrefixMap::with_builtins(cfg.namespaces))) {
        http.set_payload_max_length(cfg.max_upload_bytes);
        http.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                      std::exception_ptr ep) {
            std::string what = "internal error";
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                what = e.what();
            } catch (...) {
            }
            reply(res, 500, what + "\n");
        });
        routes();
    }

    static void reply(httplib::Response& res, int status, std::string body,
                      const char* type = "text/plain; charset=utf-8") {
        res.status = status;
        res.set_content(std::move(body), type);
    }

    static std::optional<InputFormat> request_format(const httplib::Request& req,
                                                     httplib::Response& res) {
        auto f = parse_format(req.get_header_value("X-Format"));
        if (!f) reply(res, 400, "missing or unknown X-Format header (owl, cxl, ttl)\n");
        return f;
    }

    void routes() {
        http.Post("/convert", [this](const httplib::Request& req, httplib::Response& res) {
            const auto format = request_format(req, res);
            if (!format) return;
            std::string case_id = req.has_header("X-Case-Id") ? req.get_header_value("X-Case-Id")
                                                               : "default";
            if (!store::is_valid_case_id(case_id)) {
                reply(res, 400, "invalid case id '" + case_id + "'\n");
                return;
            }
            std::shared_lock lock(mutex);
            auto outcome = convert_document(reg, req.body, *format, case_id, phrases);
            switch (outcome.status) {
                case ExitCode::Ok: reply(res, 200, std::move(outcome.document), "text/turtle; charset=utf-8"); break;
                case ExitCode::ParseFailure: reply(res, 400, std::move(outcome.document)); break;
                default: reply(res, 422, std::move(outcome.document)); break;
            }
        });

        http.Post(R"(/cases/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            if (!store::is_valid_case_id(id)) {
                reply(res, 400, "invalid case id '" + id + "'\n");
                return;
            }
            const auto format = request_format(req, res);
            if (!format) return;
            std::unique_lock lock(mutex);
            if (reg.has_case(id)) {
                reply(res, 409, "case '" + id + "' already exists\n");
                return;
            }
            RawDocument raw;
            try {
                raw = read_document(req.body, *format, id, reg, phrases);
            } catch (const ParseError& e) {
                reply(res, 400, std::string("parse error: ") + e.what() + "\n");
                return;
            }
            // Work on a copy so nothing changes unless the new state is persisted.
            store::Registry next = reg;
            try {
                next.ingest_case(id, raw.graph);
            } catch (const NormalizeError& e) {
                reply(res, 422, std::string(e.what()) + "\n");
                return;
            } catch (const store::RegistryError& e) {
                reply(res, 422, std::string(e.what()) + "\n" + e.findings().to_text(reg.prefixes()));
                return;
            }
            store::save(next, cfg.registry_dir);
            reg = std::move(next);
            reply(res, 201, io::serialize_turtle(reg.cases().at(id), reg.case_prefixes(id)),
                  "text/turtle; charset=utf-8");
        });

        http.Get(R"(/cases/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            std::shared_lock lock(mutex);
            auto it = reg.cases().find(id);
            if (it == reg.cases().end()) {
                reply(res, 404, "no case '" + id + "'\n");
                return;
            }
            reply(res, 200, io::serialize_turtle(it->second, reg.case_prefixes(id)),
                  "text/turtle; charset=utf-8");
        });

        http.Get("/cases", [this](const httplib::Request&, httplib::Response& res) {
            std::shared_lock lock(mutex);
            std::string body;
            for (const auto& [id, g] : reg.cases()) body += id + "\n";
            reply(res, 200, std::move(body));
        });

        http.Post("/query", [this](const httplib::Request& req, httplib::Response& res) {
            std::shared_lock lock(mutex);
            const auto pm = reg.prefixes();
            store::QueryPattern q;
            try {
                q = store::parse_query(req.body, pm);
            } catch (const ParseError& e) {
                reply(res, 400, std::string("malformed query: ") + e.what() + "\n");
                return;
            }
            reply(res, 200, store::bgp_query(reg, q).to_tsv(pm), "text/tab-separated-values; charset=utf-8");
        });

        http.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
            const std::string q = req.get_param_value("q");
            if (q.empty()) {
                reply(res, 400, "missing q parameter\n");
                return;
            }
            std::shared_lock lock(mutex);
            std::string body;
            for (const auto& hit : store::keyword_search(reg, q)) {
                body += hit.iri.value() + "\t" + std::to_string(hit.score) + "\n";
            }
            reply(res, 200, std::move(body));
        });
    }
};

Server::Server(ServiceConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}

Server::~Server() { stop(); }

int Server::bind() {
    const auto& cfg = impl_->cfg;
    if (cfg.port == 0) {
        const int port = impl_->http.bind_to_any_port(cfg.host);
        if (port < 0) throw Error("cannot bind " + cfg.host);
        return port;
    }
    if (!impl_->http.bind_to_port(cfg.host, cfg.port)) {
        throw Error("cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
    }
    return cfg.port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

void Server::stop() {
    if (impl_) impl_->http.stop();
}

} // namespace sesforge::service
