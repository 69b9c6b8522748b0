#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "jobs/commands.hpp"
#include "qloop/qloop.h"

struct qloop_config {
  qloop::jobs::ConfigMap map;
};

struct qloop_report {
  qloop::jobs::Report report;
  qloop::jobs::Format format = qloop::jobs::Format::Text;
};

namespace {

thread_local std::string g_last_error;

qloop_status fail(qloop_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
qloop_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qloop::UsageError& e) {
    return fail(QLOOP_USAGE_ERROR, e.what());
  } catch (const qloop::EscapeError& e) {
    return fail(QLOOP_ESCAPE_ERROR, e.what());
  } catch (const qloop::DomainError& e) {
    return fail(QLOOP_DOMAIN_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QLOOP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(QLOOP_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

const char* qloop_version(void) { return "1.0.0"; }

const char* qloop_last_error(void) { return g_last_error.c_str(); }

qloop_config* qloop_config_new(void) { return new (std::nothrow) qloop_config(); }

void qloop_config_free(qloop_config* config) { delete config; }

qloop_status qloop_config_set(qloop_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(QLOOP_USAGE_ERROR, "null argument");
  return guarded([&] {
    config->map.set(key, value);
    return QLOOP_OK;
  });
}

qloop_status qloop_config_load_file(qloop_config* config, const char* path) {
  if (!config || !path) return fail(QLOOP_USAGE_ERROR, "null argument");
  return guarded([&] {
    config->map.load_file(path);
    return QLOOP_OK;
  });
}

qloop_status qloop_config_load_text(qloop_config* config, const char* text) {
  if (!config || !text) return fail(QLOOP_USAGE_ERROR, "null argument");
  return guarded([&] {
    config->map.load_text(text);
    return QLOOP_OK;
  });
}

qloop_status qloop_run(const qloop_config* config, const char* command, qloop_report** out) {
  if (!config || !command || !out) return fail(QLOOP_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    const qloop::jobs::JobConfig c = qloop::jobs::resolve_config(config->map, command);
    auto* r = new qloop_report{qloop::jobs::run_command(command, c), c.format};
    *out = r;
    return QLOOP_OK;
  });
}

void qloop_report_free(qloop_report* report) { delete report; }

int qloop_report_passed(const qloop_report* report) { return report && report->report.passed() ? 1 : 0; }

int qloop_report_check_count(const qloop_report* report) {
  return report ? static_cast<int>(report->report.checks.size()) : 0;
}

qloop_status qloop_report_render(const qloop_report* report, const char* format, char** out) {
  if (!report || !out) return fail(QLOOP_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    qloop::jobs::Format f = report->format;
    if (format) {
      const std::string s = format;
      if (s == "json")
        f = qloop::jobs::Format::Json;
      else if (s == "csv")
        f = qloop::jobs::Format::Csv;
      else if (s == "text")
        f = qloop::jobs::Format::Text;
      else
        throw qloop::UsageError("unknown format '" + s + "'");
    }
    const std::string text = qloop::jobs::render(report->report, f);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return QLOOP_OK;
  });
}

void qloop_string_free(char* s) { std::free(s); }

}  // extern "C"
