# API module exports
