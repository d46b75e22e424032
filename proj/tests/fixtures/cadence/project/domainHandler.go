package cadence

func (x *handler) run() {
	if x.ready {
		if d.config.EnableDomainNotActiveAutoForwarding {
			x.apply()
		}
		if d.config.EnableGracefulFailover {
			x.apply()
		}
	}
}
