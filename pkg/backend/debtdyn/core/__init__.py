# Core module exports
