import logging
import os
import sys
from flask import Flask

from .config.settings import get_config


def setup_logging(config):
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL),
        format=config.LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
        ]
    )


def create_app(config=None):
    from .api.routes import api_bp, health_bp
    from .services.dmagic_service import DMagicService

    app = Flask(__name__)

    config = config or get_config()
    config.validate_config()
    app.config.from_object(config)

    setup_logging(config)

    if app.config.get('DEBUG'):
        config.print_config_summary()

    app.logger.info(f"Starting {config.APP_NAME} v{config.APP_VERSION}")

    app.extensions['dmagic_service'] = DMagicService(config)

    app.register_blueprint(health_bp)
    app.register_blueprint(api_bp)

    @app.errorhandler(404)
    def not_found(error):
        return {"success": False, "error": "Endpoint not found"}, 404

    @app.errorhandler(500)
    def internal_error(error):
        app.logger.error(f"Internal server error: {error}")
        return {"success": False, "error": "Internal server error"}, 500

    return app


if __name__ == '__main__':
    try:
        app = create_app()
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        sys.exit(1)

    port = int(os.getenv('PORT', 5000))
    app.logger.info(f"Starting server on port {port}")
    try:
        app.run(host='0.0.0.0', port=port, debug=app.config.get('DEBUG', False))
    except KeyboardInterrupt:
        app.logger.info("Shutting down gracefully...")
