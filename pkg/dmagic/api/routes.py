from flask import Blueprint, jsonify, request, current_app
from datetime import datetime
import logging
import traceback
from functools import wraps

from ..exceptions import DMagicError, DomainError, FetchError, NumeralParseError
from ..services.magic import report_to_dict
from ..services.radix import to_decimal

api_bp = Blueprint('api', __name__, url_prefix='/api')
health_bp = Blueprint('health', __name__)

logger = logging.getLogger(__name__)


def create_response(success, data=None, error=None, status_code=200, **extra):
    response_data = {
        "success": success,
        "timestamp": datetime.now().isoformat(),
    }

    if success:
        response_data["data"] = data or {}
    else:
        response_data["error"] = error or "Unknown error"
        response_data.update(extra)
        if status_code == 200:
            status_code = 400

    return jsonify(response_data), status_code


def get_service():
    return current_app.extensions['dmagic_service']


def _int_arg(name, default=None):
    raw = request.args.get(name)
    if raw is None:
        if default is None:
            raise DomainError(f"Missing required parameter '{name}'")
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"Parameter '{name}' must be an integer, got {raw!r}")


def _str_arg(name):
    raw = request.args.get(name)
    if not raw:
        raise DomainError(f"Missing required parameter '{name}'")
    return raw


def handle_errors(view):
    @wraps(view)
    def wrapper(*args, **kwargs):
        try:
            return view(*args, **kwargs)
        except NumeralParseError as e:
            logger.info(f"{request.path} rejected numeral: {e}")
            return create_response(success=False, error=str(e), status_code=400, position=e.position)
        except DomainError as e:
            logger.info(f"{request.path} rejected input: {e}")
            return create_response(success=False, error=str(e), status_code=400)
        except FetchError as e:
            logger.error(f"{request.path} upstream failure: {e}")
            return create_response(success=False, error=str(e), status_code=502)
        except DMagicError as e:
            logger.error(f"{request.path} failed: {e}")
            return create_response(success=False, error=str(e), status_code=500)
        except Exception as e:
            logger.error(f"{request.path} exception: {e}")
            logger.error(traceback.format_exc())
            return create_response(success=False, error=f"Internal server error: {str(e)}", status_code=500)

    return wrapper


@health_bp.route('/health', methods=['GET'])
def health_check():
    return create_response(
        success=True,
        data={
            "status": "healthy",
            "service": current_app.config.get('APP_NAME', 'dmagic'),
            "version": current_app.config.get('APP_VERSION', '1.0.0')
        }
    )


@api_bp.route('/lcm/<int:L>', methods=['GET'])
@handle_errors
def lcm(L):
    value = get_service().lcm(L, use_cache=False)
    return create_response(success=True, data={"L": L, "lcm": to_decimal(value)})


@api_bp.route('/convert', methods=['GET'])
@handle_errors
def convert():
    from_base = _int_arg('from', 10)
    to_base = _int_arg('to')
    numeral = get_service().convert(_str_arg('value'), from_base, to_base)
    return create_response(success=True, data={"numeral": numeral, "from": from_base, "to": to_base})


@api_bp.route('/verify', methods=['GET'])
@handle_errors
def verify():
    service = get_service()
    M = service.parse_value(_str_arg('m'), _int_arg('from', 10))
    report = service.verify(M, _int_arg('base'))
    return create_response(success=True, data=report_to_dict(report))


@api_bp.route('/table', methods=['GET'])
@handle_errors
def table():
    service = get_service()
    M = service.parse_value(_str_arg('m'), _int_arg('from', 10))
    L = _int_arg('base')
    return create_response(success=True, data={"ceiling_base": L, "table": service.table(M, L)})


@api_bp.route('/generate', methods=['GET'])
@handle_errors
def generate():
    L = _int_arg('base')
    values = get_service().generate(L, _int_arg('digit', 0), _int_arg('count', 1), _int_arg('start', 1))
    return create_response(success=True, data={"ceiling_base": L, "magic_numbers": [to_decimal(v) for v in values]})


@api_bp.route('/oracle', methods=['GET'])
@handle_errors
def oracle():
    L = _int_arg('base')
    bound = _int_arg('bound')
    values = get_service().oracle(L, bound)
    return create_response(success=True, data={"ceiling_base": L, "bound": bound, "magic_numbers": values})
